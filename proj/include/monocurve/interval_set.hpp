#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monocurve {

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A finite set of non-negative integers stored as sorted, disjoint,
/// maximal intervals. Consecutive intervals are separated by a gap of at
/// least one missing integer (next.lo >= prev.hi + 2); the empty set has no
/// intervals.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Sorts and merges overlapping or adjacent intervals.
  /// Throws std::invalid_argument on lo > hi or negative values.
  static IntervalSet canonicalize(std::span<const Interval> raw);
  static IntervalSet canonicalize(std::initializer_list<Interval> raw) {
    return canonicalize(std::span<const Interval>(raw.begin(), raw.size()));
  }
  static IntervalSet point(std::int64_t value);
  static IntervalSet range(std::int64_t lo, std::int64_t hi);
  /// Builds a set from arbitrary (possibly repeated, unsorted) points.
  static IntervalSet from_points(std::span<const std::int64_t> points);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t interval_count() const noexcept { return intervals_.size(); }
  /// Number of integers in the set.
  std::int64_t cardinality() const noexcept;
  bool contains(std::int64_t value) const noexcept;
  /// Smallest / largest element; precondition: !empty().
  std::int64_t min() const { return intervals_.front().lo; }
  std::int64_t max() const { return intervals_.back().hi; }

  /// {x + offset}; the result must stay non-negative.
  IntervalSet shifted(std::int64_t offset) const;
  /// {about - x}; requires about >= max().
  IntervalSet reflected(std::int64_t about) const;

  /// Expands every element. Intended for small sets and tests.
  std::vector<std::int64_t> points() const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}
  // Merges a list already sorted by lo.
  static std::vector<Interval> merge_sorted(std::vector<Interval> sorted);

  std::vector<Interval> intervals_;

  friend IntervalSet unite(const IntervalSet&, const IntervalSet&);
  friend IntervalSet minkowski_sum(const IntervalSet&, const IntervalSet&);
  friend IntervalSet difference(const IntervalSet&, const IntervalSet&);
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

/// {x + y | x in a, y in b}. The empty set is absorbing.
IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b);

/// Points of a that are not in b.
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);

bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// Union of [i*lo_step + offset, i*hi_step + offset] for i = first..last.
/// Requires 0 < lo_step < hi_step, first <= last, first*lo_step + offset >= 0.
/// Once first >= (lo_step - 1) / (hi_step - lo_step) the pieces chain into
/// one interval.
IntervalSet interval_chain_union(std::int64_t lo_step, std::int64_t hi_step, std::int64_t offset,
                                 std::int64_t first, std::int64_t last);

}  // namespace monocurve
