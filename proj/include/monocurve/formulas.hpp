#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "monocurve/curve.hpp"

namespace monocurve {

/// Raised when formula parameters fall outside the range the formula is
/// proved for.
class FormulaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class FormulaSource {
  CaseA,             // {0} u [a,d]
  CaseBPoint,        // {0, a, d}
  CaseBWide,         // {0} u [a,b] u {d}, b >= 2a - 1
  CaseBNarrow,       // {0} u [a,b] u {d}, (3a - 1)/2 <= b < 2a - 1
  CaseBConjecture,   // {0} u [a,b] u {d}, any b (open)
  CaseCLeft,         // [0,a] u [b,d], d - b >= a
  CaseCRight,        // [0,a] u [b,d], d - b < a
  CaseD,             // {0} u [a,b] u [c,d], c <= 2a, 2b <= d
  CaseELeftGap,      // [0,a] u [b,c] u [e,d], d - e >= a, b - a >= e - c
  CaseEFourTerm,     // [0,a] u [b,c] u [e,d], e <= 2b, 2c <= a + d
};

std::string_view to_string(FormulaSource source);

struct FormulaResult {
  std::int64_t value = 0;
  FormulaSource source = FormulaSource::CaseA;
  /// The formula is also proved to equal reg(R).
  bool asserts_regularity = false;
  bool conjectural = false;

  friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

/// ceil(num / den) for den > 0 and num >= 0 (exact integer arithmetic).
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) noexcept {
  return (num + den - 1) / den;
}

// Each value function throws FormulaDomainError outside its hypotheses.

/// ceil((d-1)/(d-a)); 1 < a < d.
FormulaResult case_a_value(std::int64_t d, std::int64_t a);
/// d/gcd(a,d) - 1; 2 <= a <= d-2.
FormulaResult case_b_point_value(std::int64_t d, std::int64_t a);
/// Wide or narrow branch, or nullopt when 2b < 3a - 1. Requires 2 <= a < b <= d-2.
std::optional<FormulaResult> case_b_value(std::int64_t d, std::int64_t a, std::int64_t b);
/// ceil((r*a + d - 1)/b) with r = ceil((a-1)/(b-a)); 2 <= a < b <= d-2.
FormulaResult case_b_conjecture_value(std::int64_t d, std::int64_t a, std::int64_t b);
/// 1 <= a, a + 2 <= b < d.
FormulaResult case_c_value(std::int64_t d, std::int64_t a, std::int64_t b);
/// 2a + 1 >= b and a + d + 1 >= 2b; equivalent to the reduction number being 2.
bool case_c_is_buchsbaum(std::int64_t d, std::int64_t a, std::int64_t b);
/// ceil((a-1)/(d-c)) + 1; 1 < a <= b < c < d, c <= 2a, 2b <= d.
FormulaResult case_d_value(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c);

/// Hypotheses of case_e_left_gap_value: 1 <= a < b <= c < e < d,
/// d - e >= a, b - a >= e - c.
bool case_e_left_gap_applies(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t e) noexcept;
/// ceil((b-1)/a).
FormulaResult case_e_left_gap_value(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c,
                                    std::int64_t e);

/// Hypotheses of case_e_value: 1 <= a < b <= c < e < d, e <= 2b, 2c <= a + d.
bool case_e_four_term_applies(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c,
                              std::int64_t e) noexcept;
/// max{ceil((b-1)/a), ceil((e-c+a-1)/a), ceil((d-c-1)/(d-e)), ceil((d-e+b-a-1)/(d-e))}.
FormulaResult case_e_value(std::int64_t d, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e);

/// Classifies the curve and applies the matching closed form (through the
/// mirror image for mirrored A and D shapes). nullopt when the shape has no
/// formula or the hypotheses fail.
std::optional<FormulaResult> closed_form(const MonomialCurve& curve);
std::optional<FormulaResult> closed_form(const MonomialCurve& curve, const CaseLabel& label);

}  // namespace monocurve
