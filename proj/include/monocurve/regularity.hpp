#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "monocurve/curve.hpp"
#include "monocurve/reduction.hpp"

namespace monocurve {

// The curve's algebra R is a finitely generated graded module over
// A = k[x^d, y^d]. It splits by alpha mod d into direct summands; each
// summand is an up-closed subset of N^2 (a staircase) in scaled coordinates
//
//   alpha = p*d + r,  beta = q*d + ((-r) mod d),
//
// with A-degree p + q + offset, offset = 0 for r = 0 and 1 otherwise. A
// staircase is resolved by its corners (generators) and the joins of
// consecutive corners (first syzygies), so reg(R) = max{c0, c1 - 1}.

struct ScaledPoint {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const ScaledPoint&, const ScaledPoint&) = default;
};

struct StaircaseClass {
  std::int64_t residue = 0;
  std::int64_t degree_offset = 0;
  /// Minimal generators sorted by p ascending (q strictly descending).
  std::vector<ScaledPoint> generators;

  std::int64_t degree_of(ScaledPoint pt) const noexcept { return pt.p + pt.q + degree_offset; }
  /// Degrees of the joins of consecutive generators.
  std::vector<std::int64_t> syzygy_degrees() const;
  /// Membership in the up-closure of the generators.
  bool covers(ScaledPoint pt) const noexcept;
};

struct ResolutionSummary {
  std::vector<std::int64_t> generator_degrees;  // sorted
  std::vector<std::int64_t> syzygy_degrees;     // sorted
  std::int64_t c0 = 0;
  std::optional<std::int64_t> c1;
  std::int64_t rank = 1;
  std::int64_t reg = 0;
  bool is_cm = true;

  friend bool operator==(const ResolutionSummary&, const ResolutionSummary&) = default;
};

struct ResidueInfo {
  std::vector<std::int64_t> residues;  // sorted
  std::int64_t rank = 1;
};

/// gcd of d and all exponents.
std::int64_t exponent_gcd(const MonomialCurve& curve);

/// Residues alpha mod d reached by some level; rank = d / exponent_gcd.
/// Throws std::logic_error if the observed residues disagree with the gcd.
ResidueInfo achieved_residues(const MonomialCurve& curve);

/// Levels scanned for staircase points: 2 * r + 2.
std::int64_t truncation_level(std::int64_t reduction_number) noexcept;

/// One class per achieved residue, in residue order. A point at level n is a
/// generator iff its alpha lies in E_n but not in E_{n-1} + {0, d}.
std::vector<StaircaseClass> staircase_decompose(const MonomialCurve& curve);
std::vector<StaircaseClass> staircase_decompose(ReductionTrace& trace, std::int64_t truncation);

ResolutionSummary summarize(const std::vector<StaircaseClass>& classes);

ResolutionSummary resolution_summary(const MonomialCurve& curve);
/// Uses an existing trace; truncation defaults to truncation_level(r).
ResolutionSummary resolution_summary(const MonomialCurve& curve, ReductionTrace& trace,
                                     std::optional<std::int64_t> truncation = std::nullopt);

bool is_cohen_macaulay(const MonomialCurve& curve);

}  // namespace monocurve
