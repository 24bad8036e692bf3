#include "monocurve/regularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace monocurve {

std::vector<std::int64_t> StaircaseClass::syzygy_degrees() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i + 1 < generators.size(); ++i) {
    out.push_back(generators[i + 1].p + generators[i].q + degree_offset);
  }
  return out;
}

bool StaircaseClass::covers(ScaledPoint pt) const noexcept {
  return std::any_of(generators.begin(), generators.end(),
                     [pt](ScaledPoint g) { return g.p <= pt.p && g.q <= pt.q; });
}

std::int64_t exponent_gcd(const MonomialCurve& curve) {
  std::int64_t g = curve.degree();
  for (const Interval& iv : curve.exponents().intervals()) {
    g = std::gcd(g, iv.lo);
    if (iv.hi > iv.lo) g = 1;  // consecutive exponents
    if (g == 1) break;
  }
  return g;
}

namespace {

std::vector<std::int64_t> residues_of(const IntervalSet& set, std::int64_t d) {
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (const Interval& iv : set.intervals()) {
    if (iv.hi - iv.lo + 1 >= d) {
      std::fill(seen.begin(), seen.end(), true);
      break;
    }
    for (std::int64_t v = iv.lo; v <= iv.hi; ++v) seen[static_cast<std::size_t>(v % d)] = true;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < d; ++r) {
    if (seen[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

ResidueInfo residues_checked(const MonomialCurve& curve, ReductionTrace& trace, std::int64_t truncation) {
  const std::int64_t d = curve.degree();
  ResidueInfo info;
  // Every class is up-closed and reached by level r, so E_N sees all of them.
  info.residues = residues_of(trace.level(truncation), d);
  const std::int64_t g = exponent_gcd(curve);
  info.rank = d / g;
  bool consistent = static_cast<std::int64_t>(info.residues.size()) == info.rank;
  for (std::int64_t r : info.residues) consistent = consistent && r % g == 0;
  if (!consistent) {
    throw std::logic_error("residue count " + std::to_string(info.residues.size()) +
                           " disagrees with d/gcd = " + std::to_string(info.rank) + " for d=" +
                           std::to_string(d) + " set " + curve.set_text());
  }
  return info;
}

}  // namespace

ResidueInfo achieved_residues(const MonomialCurve& curve) {
  ReductionTrace trace(curve);
  return residues_checked(curve, trace, truncation_level(trace.reduction_number()));
}

std::int64_t truncation_level(std::int64_t reduction_number) noexcept { return 2 * reduction_number + 2; }

std::vector<StaircaseClass> staircase_decompose(ReductionTrace& trace, std::int64_t truncation) {
  const std::int64_t d = trace.degree();
  std::map<std::int64_t, StaircaseClass> classes;
  auto add_generators = [&](const IntervalSet& fresh, std::int64_t n) {
    for (const Interval& iv : fresh.intervals()) {
      for (std::int64_t alpha = iv.lo; alpha <= iv.hi; ++alpha) {
        const std::int64_t r = alpha % d;
        StaircaseClass& cls = classes[r];
        cls.residue = r;
        cls.degree_offset = r == 0 ? 0 : 1;
        const std::int64_t p = alpha / d;
        cls.generators.push_back({p, n - p - cls.degree_offset});
      }
    }
  };
  add_generators(trace.level(0), 0);
  for (std::int64_t n = 1; n <= truncation; ++n) {
    add_generators(difference(trace.level(n), trace.pure_power_image(n - 1)), n);
  }
  std::vector<StaircaseClass> out;
  out.reserve(classes.size());
  for (auto& [r, cls] : classes) {
    std::sort(cls.generators.begin(), cls.generators.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<StaircaseClass> staircase_decompose(const MonomialCurve& curve) {
  ReductionTrace trace(curve);
  return staircase_decompose(trace, truncation_level(trace.reduction_number()));
}

ResolutionSummary summarize(const std::vector<StaircaseClass>& classes) {
  ResolutionSummary s;
  for (const StaircaseClass& cls : classes) {
    for (ScaledPoint g : cls.generators) s.generator_degrees.push_back(cls.degree_of(g));
    for (std::int64_t deg : cls.syzygy_degrees()) s.syzygy_degrees.push_back(deg);
  }
  std::sort(s.generator_degrees.begin(), s.generator_degrees.end());
  std::sort(s.syzygy_degrees.begin(), s.syzygy_degrees.end());
  s.c0 = s.generator_degrees.empty() ? 0 : s.generator_degrees.back();
  if (!s.syzygy_degrees.empty()) s.c1 = s.syzygy_degrees.back();
  s.rank = static_cast<std::int64_t>(s.generator_degrees.size() - s.syzygy_degrees.size());
  s.reg = s.c1 ? std::max(s.c0, *s.c1 - 1) : s.c0;
  s.is_cm = s.syzygy_degrees.empty();
  return s;
}

ResolutionSummary resolution_summary(const MonomialCurve& curve, ReductionTrace& trace,
                                     std::optional<std::int64_t> truncation) {
  const std::int64_t window = truncation.value_or(truncation_level(trace.reduction_number()));
  const ResidueInfo info = residues_checked(curve, trace, window);
  ResolutionSummary s = summarize(staircase_decompose(trace, window));
  if (s.rank != info.rank) {
    throw std::logic_error("staircase rank " + std::to_string(s.rank) + " disagrees with d/gcd = " +
                           std::to_string(info.rank) + " for d=" + std::to_string(curve.degree()) +
                           " set " + curve.set_text());
  }
  return s;
}

ResolutionSummary resolution_summary(const MonomialCurve& curve) {
  ReductionTrace trace(curve);
  return resolution_summary(curve, trace);
}

bool is_cohen_macaulay(const MonomialCurve& curve) { return resolution_summary(curve).is_cm; }

}  // namespace monocurve
