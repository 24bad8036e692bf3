#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monocurve/curve.hpp"
#include "monocurve/report.hpp"

namespace monocurve {

/// All curves of degree d whose exponent set has between 1 and max_intervals
/// maximal intervals, ordered by set text.
std::vector<MonomialCurve> enumerate_curves(std::int64_t d, int max_intervals);

struct SweepOptions {
  std::int64_t min_degree = 2;
  std::int64_t max_degree = 2;
  /// Empty means every shape.
  std::vector<CaseKind> cases;
  int max_intervals = 3;
  unsigned jobs = 1;
};

struct SweepSummary {
  std::int64_t curves = 0;
  std::map<std::string, std::int64_t> per_case;
  std::int64_t formula_checked = 0;
  std::int64_t formula_mismatches = 0;
  std::int64_t conjecture_checked = 0;
  std::int64_t conjecture_agreements = 0;
  std::int64_t conjecture_disagreements = 0;
  std::int64_t reg_gt_rq = 0;
  std::int64_t cm_curves = 0;
  std::int64_t cm_checked = 0;
  std::int64_t cm_violations = 0;
  std::int64_t buchsbaum_checked = 0;
  std::int64_t buchsbaum_violations = 0;
  std::int64_t invariant_violations = 0;
  std::int64_t validator_failures = 0;
  std::int64_t glp_bound_exceeded = 0;
  /// "d=<d> set=<set>" for every curve with reg > rq.
  std::vector<std::string> reg_gt_rq_instances;
  /// One line per failed proved check or validator disagreement.
  std::vector<std::string> failures;

  /// No proved-formula mismatch and no invariant or validator failure.
  bool ok() const noexcept;
  void add(const CurveReport& report);
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct SweepResult {
  std::vector<CurveReport> rows;  // ordered by (d, set text)
  SweepSummary summary;
};

SweepResult run_sweep(const SweepOptions& options);

/// Sweep rows as JSON lines followed by a {"summary": ...} line, or CSV.
std::string render_json_lines(const SweepResult& result);
std::string render_csv(const SweepResult& result);

// ---------------------------------------------------------------------------
// Invariant verification

/// Deliberate corruption of computed data, used to exercise the checker.
enum class InjectedFault { None, ReductionOffByOne, DropSyzygies, BreakMirror };

struct InvariantViolation {
  std::string invariant;
  std::string detail;
};

/// Checks c0 = rq, reg >= rq, the rank identity, containment and persistence
/// of stabilized levels, truncation stability at N + 2, staircase shape, and
/// mirror equivariance of the levels, labels, rq and the resolution.
std::optional<InvariantViolation> check_invariants(const MonomialCurve& curve,
                                                   InjectedFault fault = InjectedFault::None);

struct VerifyFailure {
  std::int64_t d = 0;
  std::string set_text;
  InvariantViolation violation;
};

struct VerifyResult {
  std::int64_t curves_checked = 0;
  std::optional<VerifyFailure> first_failure;  // lowest (d, set text)
};

VerifyResult run_verify(std::int64_t max_degree, unsigned jobs, int max_intervals = 3,
                        InjectedFault fault = InjectedFault::None);

}  // namespace monocurve
