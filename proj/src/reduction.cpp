#include "monocurve/reduction.hpp"

#include <stdexcept>

namespace monocurve {

ReductionTrace::ReductionTrace(const MonomialCurve& curve)
    : degree_(curve.degree()), generators_(curve.exponents()) {
  levels_.push_back(IntervalSet::point(0));
  levels_.push_back(generators_);
  const std::int64_t bound = stabilization_bound(curve);
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (stabilized(n)) {
      reduction_number_ = n;
      return;
    }
  }
  throw std::logic_error("no stabilized level up to " + std::to_string(bound) + " for d=" +
                         std::to_string(degree_) + " set " + curve.set_text());
}

std::int64_t ReductionTrace::stabilization_bound(const MonomialCurve& curve) {
  return curve.size() * (curve.degree() - 1);
}

void ReductionTrace::extend_to(std::int64_t n) {
  while (computed_levels() <= n) {
    levels_.push_back(minkowski_sum(levels_.back(), generators_));
  }
}

const IntervalSet& ReductionTrace::level(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("level index must be non-negative");
  extend_to(n);
  return levels_[static_cast<std::size_t>(n)];
}

IntervalSet ReductionTrace::pure_power_image(std::int64_t n) {
  const IntervalSet& current = level(n);
  return unite(current, current.shifted(degree_));
}

bool ReductionTrace::stabilized(std::int64_t n) {
  extend_to(n + 1);
  return levels_[static_cast<std::size_t>(n + 1)] == pure_power_image(n);
}

IntervalSet exponent_set(const MonomialCurve& curve, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("level index must be non-negative");
  IntervalSet out = IntervalSet::point(0);
  for (std::int64_t i = 0; i < n; ++i) out = minkowski_sum(out, curve.exponents());
  return out;
}

std::int64_t reduction_number(const MonomialCurve& curve) {
  return ReductionTrace(curve).reduction_number();
}

}  // namespace monocurve
