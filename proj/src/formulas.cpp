#include "monocurve/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace monocurve {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw FormulaDomainError(what);
}

FormulaResult proved(std::int64_t value, FormulaSource source, bool asserts_regularity) {
  return FormulaResult{value, source, asserts_regularity, false};
}

}  // namespace

std::string_view to_string(FormulaSource source) {
  switch (source) {
    case FormulaSource::CaseA: return "case-a";
    case FormulaSource::CaseBPoint: return "case-b-point";
    case FormulaSource::CaseBWide: return "case-b-wide";
    case FormulaSource::CaseBNarrow: return "case-b-narrow";
    case FormulaSource::CaseBConjecture: return "case-b-conjecture";
    case FormulaSource::CaseCLeft: return "case-c-left";
    case FormulaSource::CaseCRight: return "case-c-right";
    case FormulaSource::CaseD: return "case-d";
    case FormulaSource::CaseELeftGap: return "case-e-left-gap";
    case FormulaSource::CaseEFourTerm: return "case-e-four-term";
  }
  return "unknown";
}

FormulaResult case_a_value(std::int64_t d, std::int64_t a) {
  require(1 < a && a < d, "case A requires 1 < a < d");
  return proved(ceil_div(d - 1, d - a), FormulaSource::CaseA, true);
}

FormulaResult case_b_point_value(std::int64_t d, std::int64_t a) {
  require(2 <= a && a + 2 <= d, "case B (point) requires 2 <= a <= d - 2");
  return proved(d / std::gcd(a, d) - 1, FormulaSource::CaseBPoint, true);
}

std::optional<FormulaResult> case_b_value(std::int64_t d, std::int64_t a, std::int64_t b) {
  require(2 <= a && a < b && b + 2 <= d, "case B requires 2 <= a < b <= d - 2");
  if (b >= 2 * a - 1) return proved(ceil_div(a + d - 1, b), FormulaSource::CaseBWide, true);
  if (2 * b >= 3 * a - 1) return proved(ceil_div(2 * a + d - 1, b), FormulaSource::CaseBNarrow, true);
  return std::nullopt;
}

FormulaResult case_b_conjecture_value(std::int64_t d, std::int64_t a, std::int64_t b) {
  require(2 <= a && a < b && b + 2 <= d, "case B requires 2 <= a < b <= d - 2");
  const std::int64_t r = ceil_div(a - 1, b - a);
  return FormulaResult{ceil_div(r * a + d - 1, b), FormulaSource::CaseBConjecture, false, true};
}

FormulaResult case_c_value(std::int64_t d, std::int64_t a, std::int64_t b) {
  require(1 <= a && a + 2 <= b && b < d, "case C requires 1 <= a, a + 2 <= b < d");
  if (d - b >= a) return proved(ceil_div(b - 1, a), FormulaSource::CaseCLeft, true);
  return proved(ceil_div(d - a - 1, d - b), FormulaSource::CaseCRight, true);
}

bool case_c_is_buchsbaum(std::int64_t d, std::int64_t a, std::int64_t b) {
  require(1 <= a && a + 2 <= b && b < d, "case C requires 1 <= a, a + 2 <= b < d");
  return 2 * a + 1 >= b && a + d + 1 >= 2 * b;
}

FormulaResult case_d_value(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c) {
  require(1 < a && a <= b && b < c && c < d, "case D requires 1 < a <= b < c < d");
  require(c <= 2 * a && 2 * b <= d, "case D formula requires c <= 2a and 2b <= d");
  return proved(ceil_div(a - 1, d - c) + 1, FormulaSource::CaseD, true);
}

namespace {

bool case_e_shape(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e) noexcept {
  return 1 <= a && a < b && b <= c && c < e && e < d;
}

}  // namespace

bool case_e_left_gap_applies(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t e) noexcept {
  return case_e_shape(d, a, b, c, e) && d - e >= a && b - a >= e - c;
}

FormulaResult case_e_left_gap_value(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c,
                                    std::int64_t e) {
  require(case_e_shape(d, a, b, c, e), "case E requires 1 <= a < b <= c < e < d");
  require(d - e >= a && b - a >= e - c, "left-gap formula requires d - e >= a and b - a >= e - c");
  return proved(ceil_div(b - 1, a), FormulaSource::CaseELeftGap, true);
}

bool case_e_four_term_applies(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c,
                              std::int64_t e) noexcept {
  return case_e_shape(d, a, b, c, e) && e <= 2 * b && 2 * c <= a + d;
}

FormulaResult case_e_value(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e) {
  require(case_e_shape(d, a, b, c, e), "case E requires 1 <= a < b <= c < e < d");
  require(e <= 2 * b && 2 * c <= a + d, "four-term formula requires e <= 2b and 2c <= a + d");
  const std::int64_t value = std::max({ceil_div(b - 1, a), ceil_div(e - c + a - 1, a),
                                       ceil_div(d - c - 1, d - e), ceil_div(d - e + b - a - 1, d - e)});
  return proved(value, FormulaSource::CaseEFourTerm, false);
}

std::optional<FormulaResult> closed_form(const MonomialCurve& curve, const CaseLabel& label) {
  const std::int64_t d = curve.degree();
  const std::int64_t a = label.a, b = label.b, c = label.c, e = label.e;
  switch (label.kind) {
    case CaseKind::A:
      return case_a_value(d, a);
    case CaseKind::BPoint:
      return case_b_point_value(d, a);
    case CaseKind::B:
      return case_b_value(d, a, b);
    case CaseKind::C:
      return case_c_value(d, a, b);
    case CaseKind::D:
      if (c <= 2 * a && 2 * b <= d) return case_d_value(d, a, b, c);
      return std::nullopt;
    case CaseKind::E:
      if (case_e_left_gap_applies(d, a, b, c, e)) return case_e_left_gap_value(d, a, b, c, e);
      if (case_e_four_term_applies(d, a, b, c, e)) return case_e_value(d, a, b, c, e);
      return std::nullopt;
    case CaseKind::TwoGenerators:
    case CaseKind::General:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<FormulaResult> closed_form(const MonomialCurve& curve) {
  return closed_form(curve, classify(curve));
}

}  // namespace monocurve
