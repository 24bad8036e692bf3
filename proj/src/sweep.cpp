#include "monocurve/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "monocurve/parallel.hpp"
#include "monocurve/reduction.hpp"
#include "monocurve/regularity.hpp"

namespace monocurve {

namespace {

// Appends every completion of `prefix` (a list of closed intervals ending
// before d) that uses at most `remaining` more intervals and ends at d.
void extend_shapes(std::int64_t d, int remaining, std::vector<Interval>& prefix,
                   std::vector<MonomialCurve>& out) {
  const std::int64_t lo = prefix.empty() ? 0 : prefix.back().hi + 2;
  if (prefix.empty()) {
    // First interval starts at 0.
    for (std::int64_t hi = 0; hi <= d; ++hi) {
      if (hi < d && remaining < 2) continue;
      prefix.push_back({0, hi});
      if (hi == d) {
        out.push_back(MonomialCurve::make(d, prefix));
      } else {
        extend_shapes(d, remaining - 1, prefix, out);
      }
      prefix.pop_back();
    }
    return;
  }
  for (std::int64_t start = lo; start <= d; ++start) {
    // Closing interval [start, d].
    prefix.push_back({start, d});
    out.push_back(MonomialCurve::make(d, prefix));
    prefix.pop_back();
    if (remaining < 2) continue;
    for (std::int64_t hi = start; hi + 2 <= d; ++hi) {
      prefix.push_back({start, hi});
      extend_shapes(d, remaining - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

std::string curve_id(std::int64_t d, const std::string& set_text) {
  return "d=" + std::to_string(d) + " set=" + set_text;
}

}  // namespace

std::vector<MonomialCurve> enumerate_curves(std::int64_t d, int max_intervals) {
  std::vector<MonomialCurve> out;
  if (d < 1 || max_intervals < 1) return out;
  std::vector<Interval> prefix;
  extend_shapes(d, max_intervals, prefix, out);
  std::sort(out.begin(), out.end(), [](const MonomialCurve& x, const MonomialCurve& y) {
    return x.set_text() < y.set_text();
  });
  return out;
}

bool SweepSummary::ok() const noexcept {
  return formula_mismatches == 0 && cm_violations == 0 && buchsbaum_violations == 0 &&
         invariant_violations == 0 && validator_failures == 0;
}

void SweepSummary::add(const CurveReport& r) {
  const std::string id = curve_id(r.d, r.set_text);
  ++curves;
  ++per_case[std::string(to_string(r.label.kind))];
  const CurveChecks& c = r.checks;
  if (c.formula_matches) {
    ++formula_checked;
    if (!*c.formula_matches) {
      ++formula_mismatches;
      failures.push_back("formula mismatch: " + id + " rq=" + std::to_string(r.rq_oracle) +
                         " reg=" + std::to_string(r.reg) + " formula=" + std::to_string(r.closed_form->value) +
                         " (" + std::string(to_string(r.closed_form->source)) + ")");
    }
  }
  if (c.conjecture_matches) {
    ++conjecture_checked;
    ++(*c.conjecture_matches ? conjecture_agreements : conjecture_disagreements);
  }
  if (r.reg > r.rq_oracle) {
    ++reg_gt_rq;
    reg_gt_rq_instances.push_back(id + " rq=" + std::to_string(r.rq_oracle) + " reg=" + std::to_string(r.reg));
  }
  if (r.is_cm) ++cm_curves;
  if (c.cm_matches) {
    ++cm_checked;
    if (!*c.cm_matches) {
      ++cm_violations;
      failures.push_back("Cohen-Macaulay status mismatch: " + id);
    }
  }
  if (c.buchsbaum_matches) {
    ++buchsbaum_checked;
    if (!*c.buchsbaum_matches) {
      ++buchsbaum_violations;
      failures.push_back("Buchsbaum equivalence violated: " + id);
    }
  }
  if (!c.c0_equals_rq || !c.reg_ge_rq) {
    ++invariant_violations;
    failures.push_back("invariant violated (c0 = rq, reg >= rq): " + id);
  }
  if (exceeds_glp_bound(r)) ++glp_bound_exceeded;
}

nlohmann::json SweepSummary::to_json() const {
  return {
      {"curves", curves},
      {"per_case", per_case},
      {"formula_checked", formula_checked},
      {"formula_mismatches", formula_mismatches},
      {"conjecture_checked", conjecture_checked},
      {"conjecture_agreements", conjecture_agreements},
      {"conjecture_disagreements", conjecture_disagreements},
      {"reg_gt_rq", reg_gt_rq},
      {"reg_gt_rq_instances", reg_gt_rq_instances},
      {"cm_curves", cm_curves},
      {"cm_checked", cm_checked},
      {"cm_violations", cm_violations},
      {"buchsbaum_checked", buchsbaum_checked},
      {"buchsbaum_violations", buchsbaum_violations},
      {"invariant_violations", invariant_violations},
      {"validator_failures", validator_failures},
      {"glp_bound_exceeded", glp_bound_exceeded},
      {"failures", failures},
      {"ok", ok()},
  };
}

std::string SweepSummary::to_text() const {
  std::ostringstream os;
  os << "curves:                   " << curves << '\n';
  for (const auto& [name, count] : per_case) os << "  " << name << ": " << count << '\n';
  os << "formula checked:          " << formula_checked << '\n'
     << "formula mismatches:       " << formula_mismatches << '\n'
     << "conjecture agree/disagree: " << conjecture_agreements << '/' << conjecture_disagreements << '\n'
     << "reg > rq instances:       " << reg_gt_rq << '\n'
     << "Cohen-Macaulay curves:    " << cm_curves << '\n'
     << "CM status violations:     " << cm_violations << " of " << cm_checked << '\n'
     << "Buchsbaum violations:     " << buchsbaum_violations << " of " << buchsbaum_checked << '\n'
     << "invariant violations:     " << invariant_violations << '\n'
     << "validator failures:       " << validator_failures << '\n'
     << "reg > d - |M| + 2:        " << glp_bound_exceeded << '\n';
  for (const std::string& line : reg_gt_rq_instances) os << "  reg > rq: " << line << '\n';
  for (const std::string& line : failures) os << "  FAIL " << line << '\n';
  os << (ok() ? "status: ok" : "status: FAILED") << '\n';
  return os.str();
}

SweepResult run_sweep(const SweepOptions& options) {
  std::vector<MonomialCurve> curves;
  for (std::int64_t d = options.min_degree; d <= options.max_degree; ++d) {
    for (MonomialCurve& curve : enumerate_curves(d, options.max_intervals)) {
      if (!options.cases.empty()) {
        const CaseKind kind = classify(curve).kind;
        if (std::find(options.cases.begin(), options.cases.end(), kind) == options.cases.end()) continue;
      }
      curves.push_back(std::move(curve));
    }
  }

  SweepResult result;
  result.rows = parallel_map(curves.size(), options.jobs, [&curves](std::size_t i) { return build_report(curves[i]); });
  // Independent validator pass over the finished rows.
  const auto verdicts = parallel_map(result.rows.size(), options.jobs,
                                     [&result](std::size_t i) { return validate_report(result.rows[i]); });
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    result.summary.add(result.rows[i]);
    if (verdicts[i]) {
      ++result.summary.validator_failures;
      result.summary.failures.push_back("validator: " + curve_id(result.rows[i].d, result.rows[i].set_text) +
                                        ": " + *verdicts[i]);
    }
  }
  return result;
}

std::string render_json_lines(const SweepResult& result) {
  std::string out;
  for (const CurveReport& row : result.rows) out += to_json(row).dump() + '\n';
  out += nlohmann::json{{"summary", result.summary.to_json()}}.dump() + '\n';
  return out;
}

std::string render_csv(const SweepResult& result) {
  std::string out = csv_header() + '\n';
  for (const CurveReport& row : result.rows) out += to_csv_row(row) + '\n';
  return out;
}

// ---------------------------------------------------------------------------

namespace {

InvariantViolation violation(std::string invariant, std::string detail) {
  return {std::move(invariant), std::move(detail)};
}

bool strictly_descending_q(const StaircaseClass& cls) {
  for (std::size_t i = 0; i + 1 < cls.generators.size(); ++i) {
    if (cls.generators[i].p >= cls.generators[i + 1].p || cls.generators[i].q <= cls.generators[i + 1].q) {
      return false;
    }
  }
  return true;
}

bool mirrored_flag_ok(const CaseLabel& original, const CaseLabel& image) {
  if (original.kind != image.kind) return false;
  const bool asymmetric = original.kind == CaseKind::A || original.kind == CaseKind::D;
  return asymmetric ? image.mirrored != original.mirrored : !image.mirrored && !original.mirrored;
}

}  // namespace

std::optional<InvariantViolation> check_invariants(const MonomialCurve& curve, InjectedFault fault) {
  try {
    const std::int64_t d = curve.degree();
    ReductionTrace trace(curve);
    std::int64_t rq = trace.reduction_number();
    ResolutionSummary res = resolution_summary(curve, trace);
    if (fault == InjectedFault::ReductionOffByOne) ++rq;
    if (fault == InjectedFault::DropSyzygies) {
      res.syzygy_degrees.clear();
      res.c1.reset();
    }

    if (res.c0 != rq) {
      return violation("c0-equals-rq", "c0=" + std::to_string(res.c0) + " rq=" + std::to_string(rq));
    }
    if (res.reg < rq) {
      return violation("reg-ge-rq", "reg=" + std::to_string(res.reg) + " rq=" + std::to_string(rq));
    }
    const std::int64_t expected_rank = d / exponent_gcd(curve);
    const auto gens = static_cast<std::int64_t>(res.generator_degrees.size());
    const auto syz = static_cast<std::int64_t>(res.syzygy_degrees.size());
    if (gens - syz != expected_rank) {
      return violation("rank-identity", std::to_string(gens) + " generators - " + std::to_string(syz) +
                                            " syzygies != d/gcd = " + std::to_string(expected_rank));
    }

    const std::int64_t window = truncation_level(rq);
    for (std::int64_t n = 0; n <= window + 2; ++n) {
      if (!is_subset(trace.pure_power_image(n), trace.level(n + 1))) {
        return violation("containment", "E_" + std::to_string(n) + " + {0,d} not inside E_" + std::to_string(n + 1));
      }
      if (trace.level(n + 1).cardinality() < trace.level(n).cardinality()) {
        return violation("monotone-levels", "|E_n| decreases at n=" + std::to_string(n));
      }
      const bool stable = trace.stabilized(n);
      if (n < rq && stable) return violation("reduction-minimality", "level " + std::to_string(n) + " stabilized");
      if (n >= rq && !stable) return violation("persistence", "level " + std::to_string(n) + " not stabilized");
    }

    const auto classes = staircase_decompose(trace, window);
    if (static_cast<std::int64_t>(classes.size()) != expected_rank) {
      return violation("rank-identity", "class count " + std::to_string(classes.size()));
    }
    for (const StaircaseClass& cls : classes) {
      if (cls.generators.empty() || !strictly_descending_q(cls)) {
        return violation("staircase-shape", "residue " + std::to_string(cls.residue));
      }
    }

    if (!(resolution_summary(curve, trace, window + 2) == res)) {
      return violation("truncation-stability", "resolution changes at N+2 = " + std::to_string(window + 2));
    }

    const MonomialCurve image = mirror(curve);
    if (!(mirror(image) == curve)) return violation("mirror-involution", "mirror(mirror(C)) != C");
    if (!mirrored_flag_ok(classify(curve), classify(image))) {
      return violation("mirror-classification", "label does not transform under mirror");
    }
    ReductionTrace image_trace(image);
    for (std::int64_t n = 0; n <= window; ++n) {
      if (!(image_trace.level(n) == trace.level(n).reflected(n * d))) {
        return violation("mirror-equivariance", "E_" + std::to_string(n) + " of the mirror is not the reflection");
      }
    }
    if (image_trace.reduction_number() != rq) {
      return violation("mirror-equivariance", "rq differs under mirror");
    }
    ResolutionSummary image_res = resolution_summary(image, image_trace);
    if (fault == InjectedFault::BreakMirror) ++image_res.reg;
    if (image_res.reg != res.reg || image_res.generator_degrees != res.generator_degrees ||
        image_res.syzygy_degrees != res.syzygy_degrees) {
      return violation("mirror-equivariance", "resolution differs under mirror");
    }
  } catch (const std::exception& e) {
    return violation("internal", e.what());
  }
  return std::nullopt;
}

VerifyResult run_verify(std::int64_t max_degree, unsigned jobs, int max_intervals, InjectedFault fault) {
  std::vector<MonomialCurve> curves;
  for (std::int64_t d = 2; d <= max_degree; ++d) {
    auto batch = enumerate_curves(d, max_intervals);
    curves.insert(curves.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  const auto verdicts =
      parallel_map(curves.size(), jobs, [&](std::size_t i) { return check_invariants(curves[i], fault); });
  VerifyResult result;
  result.curves_checked = static_cast<std::int64_t>(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (verdicts[i]) {
      result.first_failure = VerifyFailure{curves[i].degree(), curves[i].set_text(), *verdicts[i]};
      break;
    }
  }
  return result;
}

}  // namespace monocurve
