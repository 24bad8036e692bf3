#pragma once

#include <cstdint>
#include <deque>

#include "monocurve/curve.hpp"
#include "monocurve/interval_set.hpp"

namespace monocurve {

/// Level sets E_n = {alpha | x^alpha y^(nd - alpha) lies in degree n of the
/// curve's algebra}, computed incrementally as E_{n+1} = E_n + E_1.
///
/// Level n is stabilized when E_{n+1} = E_n + {0, d}, i.e. degree n + 1 is
/// generated by the pure powers over degree n. The reduction number with
/// respect to (x^d, y^d) is the least stabilized level; stabilization is
/// reached no later than |M| * (d - 1).
class ReductionTrace {
 public:
  /// Computes levels 0 .. r + 1 where r is the reduction number. Throws
  /// std::logic_error if no level up to |M| * (d - 1) stabilizes.
  explicit ReductionTrace(const MonomialCurve& curve);

  std::int64_t reduction_number() const noexcept { return reduction_number_; }
  std::int64_t degree() const noexcept { return degree_; }

  /// E_n, extending the cache as needed.
  const IntervalSet& level(std::int64_t n);
  /// Whether E_{n+1} = E_n + {0, d}; extends the cache as needed.
  bool stabilized(std::int64_t n);
  /// E_n + {0, d}.
  IntervalSet pure_power_image(std::int64_t n);

  /// Number of cached levels (E_0 .. E_{computed_levels() - 1}).
  std::int64_t computed_levels() const noexcept { return static_cast<std::int64_t>(levels_.size()); }

  /// Upper bound on the reduction number from the pigeonhole argument.
  static std::int64_t stabilization_bound(const MonomialCurve& curve);

 private:
  void extend_to(std::int64_t n);

  std::int64_t degree_;
  IntervalSet generators_;  // E_1
  std::deque<IntervalSet> levels_;  // references stay valid as it grows
  std::int64_t reduction_number_ = 0;
};

/// E_n for a single level.
IntervalSet exponent_set(const MonomialCurve& curve, std::int64_t n);

std::int64_t reduction_number(const MonomialCurve& curve);

}  // namespace monocurve
