#include "monocurve/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace monocurve {

std::vector<Interval> IntervalSet::merge_sorted(std::vector<Interval> sorted) {
  std::vector<Interval> out;
  out.reserve(sorted.size());
  for (const Interval& iv : sorted) {
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::canonicalize(std::span<const Interval> raw) {
  std::vector<Interval> items(raw.begin(), raw.end());
  for (const Interval& iv : items) {
    if (iv.lo > iv.hi) {
      throw std::invalid_argument("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                  "] has lo > hi");
    }
    if (iv.lo < 0) {
      throw std::invalid_argument("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                  "] contains negative values");
    }
  }
  std::sort(items.begin(), items.end());
  return IntervalSet(merge_sorted(std::move(items)));
}

IntervalSet IntervalSet::point(std::int64_t value) { return range(value, value); }

IntervalSet IntervalSet::range(std::int64_t lo, std::int64_t hi) {
  const Interval iv{lo, hi};
  return canonicalize(std::span<const Interval>(&iv, 1));
}

IntervalSet IntervalSet::from_points(std::span<const std::int64_t> points) {
  std::vector<Interval> raw;
  raw.reserve(points.size());
  for (std::int64_t p : points) raw.push_back({p, p});
  return canonicalize(raw);
}

std::int64_t IntervalSet::cardinality() const noexcept {
  std::int64_t total = 0;
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo + 1;
  return total;
}

bool IntervalSet::contains(std::int64_t value) const noexcept {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), value,
                             [](std::int64_t v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return value <= it->hi;
}

IntervalSet IntervalSet::shifted(std::int64_t offset) const {
  if (!empty() && min() + offset < 0) {
    throw std::invalid_argument("shift would produce negative values");
  }
  std::vector<Interval> out = intervals_;
  for (Interval& iv : out) {
    iv.lo += offset;
    iv.hi += offset;
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::reflected(std::int64_t about) const {
  if (!empty() && max() > about) {
    throw std::invalid_argument("reflection point below the set maximum");
  }
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it) {
    out.push_back({about - it->hi, about - it->lo});
  }
  return IntervalSet(std::move(out));
}

std::vector<std::int64_t> IntervalSet::points() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (const Interval& iv : intervals_) {
    for (std::int64_t v = iv.lo; v <= iv.hi; ++v) out.push_back(v);
  }
  return out;
}

std::string IntervalSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) out += ", ";
    const Interval& iv = intervals_[i];
    out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
  }
  return out + "}";
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> merged;
  merged.reserve(a.intervals_.size() + b.intervals_.size());
  std::merge(a.intervals_.begin(), a.intervals_.end(), b.intervals_.begin(), b.intervals_.end(),
             std::back_inserter(merged));
  return IntervalSet(IntervalSet::merge_sorted(std::move(merged)));
}

IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Interval> sums;
  sums.reserve(a.intervals_.size() * b.intervals_.size());
  for (const Interval& x : a.intervals_) {
    for (const Interval& y : b.intervals_) sums.push_back({x.lo + y.lo, x.hi + y.hi});
  }
  std::sort(sums.begin(), sums.end());
  return IntervalSet(IntervalSet::merge_sorted(std::move(sums)));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  auto cut = b.intervals_.begin();
  for (Interval piece : a.intervals_) {
    while (cut != b.intervals_.end() && cut->hi < piece.lo) ++cut;
    auto scan = cut;
    bool consumed = false;
    while (scan != b.intervals_.end() && scan->lo <= piece.hi) {
      if (scan->lo > piece.lo) out.push_back({piece.lo, scan->lo - 1});
      if (scan->hi >= piece.hi) {
        consumed = true;
        break;
      }
      piece.lo = scan->hi + 1;
      ++scan;
    }
    if (!consumed) out.push_back(piece);
  }
  return IntervalSet(std::move(out));
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  const auto& outer = b.intervals();
  auto it = outer.begin();
  for (const Interval& iv : a.intervals()) {
    while (it != outer.end() && it->hi < iv.lo) ++it;
    if (it == outer.end() || it->lo > iv.lo || it->hi < iv.hi) return false;
  }
  return true;
}

IntervalSet interval_chain_union(std::int64_t lo_step, std::int64_t hi_step, std::int64_t offset,
                                 std::int64_t first, std::int64_t last) {
  if (lo_step <= 0 || lo_step >= hi_step) {
    throw std::invalid_argument("interval_chain_union requires 0 < lo_step < hi_step");
  }
  if (first < 0 || first > last) {
    throw std::invalid_argument("interval_chain_union requires 0 <= first <= last");
  }
  std::vector<Interval> pieces;
  pieces.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t i = first; i <= last; ++i) {
    pieces.push_back({i * lo_step + offset, i * hi_step + offset});
  }
  return IntervalSet::canonicalize(pieces);
}

}  // namespace monocurve
