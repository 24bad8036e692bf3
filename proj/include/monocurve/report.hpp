#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "monocurve/curve.hpp"
#include "monocurve/formulas.hpp"

namespace monocurve {

/// Consistency checks for one curve. Optional checks are absent when they
/// do not apply to the curve's shape.
struct CurveChecks {
  bool c0_equals_rq = false;
  bool reg_ge_rq = false;
  /// Closed form equals the oracle (and reg, when the formula asserts it).
  std::optional<bool> formula_matches;
  /// Case B: the open ceil((r*a + d - 1)/b) guess equals the oracle.
  std::optional<bool> conjecture_matches;
  /// Shapes with a known Cohen-Macaulay status (A, Bpoint, B, C, D in range).
  std::optional<bool> cm_matches;
  /// Case C: the Buchsbaum inequalities hold iff the reduction number is 2.
  std::optional<bool> buchsbaum_matches;

  friend bool operator==(const CurveChecks&, const CurveChecks&) = default;
};

struct CurveReport {
  std::int64_t d = 0;
  std::string set_text;
  std::int64_t monomials = 0;
  CaseLabel label;
  std::int64_t rq_oracle = 0;
  std::optional<FormulaResult> closed_form;
  std::optional<std::int64_t> conjecture_value;
  std::int64_t reg = 0;
  std::int64_t c0 = 0;
  std::optional<std::int64_t> c1;
  std::int64_t num_generators = 0;
  std::int64_t num_syzygies = 0;
  std::int64_t rank = 0;
  bool is_cm = false;
  std::optional<bool> buchsbaum_case_c;
  CurveChecks checks;
};

/// Runs the oracle, the resolution and the formula bank on one curve.
CurveReport build_report(const MonomialCurve& curve);

/// Cohen-Macaulay status implied by the shape, when one is known.
std::optional<bool> expected_cohen_macaulay(const CaseLabel& label, const std::optional<FormulaResult>& formula);

/// Recomputes the check block from the report's data fields.
CurveChecks derive_checks(const CurveReport& report);

/// Independent pass: re-parses the curve, re-derives label, closed form and
/// checks from scratch and compares them with the stored fields. Returns a
/// description of the first disagreement.
std::optional<std::string> validate_report(const CurveReport& report);

/// Whether reg exceeds d - |M| + 2 (reported, never enforced).
bool exceeds_glp_bound(const CurveReport& report);

nlohmann::json to_json(const CurveReport& report);

std::string csv_header();
std::string to_csv_row(const CurveReport& report);

}  // namespace monocurve
