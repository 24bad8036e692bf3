#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monocurve/interval_set.hpp"

namespace monocurve {

/// Raised when a degree / exponent set pair does not describe a curve.
class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A projective monomial curve: the algebra generated by the monomials
/// x^alpha y^(d - alpha) for alpha in the exponent set, which always
/// contains the two pure powers (alpha = 0 and alpha = d).
class MonomialCurve {
 public:
  /// Validates and canonicalizes. Throws CurveError when d < 1, when 0 or d
  /// is missing, or when any exponent exceeds d.
  static MonomialCurve make(std::int64_t degree, std::span<const Interval> raw_exponents);
  static MonomialCurve make(std::int64_t degree, const IntervalSet& exponents);
  /// Parses the exponent set from set text (see parse_set_text).
  static MonomialCurve parse(std::int64_t degree, std::string_view set_text);

  std::int64_t degree() const noexcept { return degree_; }
  const IntervalSet& exponents() const noexcept { return exponents_; }
  std::size_t interval_count() const noexcept { return exponents_.interval_count(); }
  /// Number of monomials.
  std::int64_t size() const noexcept { return exponents_.cardinality(); }

  /// Interval endpoints a_0 = 0 <= a_1 < a_2 <= ... <= a_{2m+1} = d.
  std::vector<std::int64_t> endpoints() const;

  std::string set_text() const;

  friend bool operator==(const MonomialCurve&, const MonomialCurve&) = default;

 private:
  MonomialCurve(std::int64_t degree, IntervalSet exponents)
      : degree_(degree), exponents_(std::move(exponents)) {}

  std::int64_t degree_ = 1;
  IntervalSet exponents_;
};

/// The curve obtained by swapping x and y (alpha -> d - alpha).
MonomialCurve mirror(const MonomialCurve& curve);

/// Parses comma-separated tokens, each "lo-hi" or "v", e.g. "0,4-9".
/// Throws CurveError on malformed text.
IntervalSet parse_set_text(std::string_view text);
std::string format_set_text(const IntervalSet& set);

enum class CaseKind { TwoGenerators, A, BPoint, B, C, D, E, General };

std::string_view to_string(CaseKind kind);
/// Accepts the names produced by to_string (case-sensitive).
std::optional<CaseKind> parse_case_kind(std::string_view name);

/// Shape of a curve's exponent set. Parameters describe the orientation the
/// case is stated in, i.e. the mirror image when mirrored is set:
///   A:      {0} u [a,d]
///   BPoint: {0, a, d}
///   B:      {0} u [a,b] u {d}
///   C:      [0,a] u [b,d]
///   D:      {0} u [a,b] u [c,d]
///   E:      [0,a] u [b,c] u [e,d]
/// Unused parameters are zero.
struct CaseLabel {
  CaseKind kind = CaseKind::General;
  bool mirrored = false;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t e = 0;

  std::string params_text() const;

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

CaseLabel classify(const MonomialCurve& curve);

}  // namespace monocurve
