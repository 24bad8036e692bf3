#include "monocurve/report.hpp"

#include "monocurve/reduction.hpp"
#include "monocurve/regularity.hpp"

namespace monocurve {

namespace {

std::optional<std::int64_t> conjecture_for(const MonomialCurve& curve, const CaseLabel& label) {
  if (label.kind != CaseKind::B) return std::nullopt;
  return case_b_conjecture_value(curve.degree(), label.a, label.b).value;
}

std::optional<bool> buchsbaum_for(const MonomialCurve& curve, const CaseLabel& label) {
  if (label.kind != CaseKind::C) return std::nullopt;
  return case_c_is_buchsbaum(curve.degree(), label.a, label.b);
}

}  // namespace

std::optional<bool> expected_cohen_macaulay(const CaseLabel& label, const std::optional<FormulaResult>& formula) {
  switch (label.kind) {
    case CaseKind::TwoGenerators:
    case CaseKind::A:
    case CaseKind::BPoint:
    case CaseKind::B:
      return true;
    case CaseKind::C:
      return false;
    case CaseKind::D:
      if (formula) return true;
      return std::nullopt;
    case CaseKind::E:
    case CaseKind::General:
      return std::nullopt;
  }
  return std::nullopt;
}

CurveChecks derive_checks(const CurveReport& r) {
  CurveChecks checks;
  checks.c0_equals_rq = r.c0 == r.rq_oracle;
  checks.reg_ge_rq = r.reg >= r.rq_oracle;
  if (r.closed_form) {
    checks.formula_matches =
        r.closed_form->value == r.rq_oracle && (!r.closed_form->asserts_regularity || r.reg == r.rq_oracle);
  }
  if (r.conjecture_value) checks.conjecture_matches = *r.conjecture_value == r.rq_oracle;
  if (const auto expected = expected_cohen_macaulay(r.label, r.closed_form)) {
    checks.cm_matches = *expected == r.is_cm;
  }
  if (r.buchsbaum_case_c) checks.buchsbaum_matches = *r.buchsbaum_case_c == (r.rq_oracle == 2);
  return checks;
}

CurveReport build_report(const MonomialCurve& curve) {
  CurveReport r;
  r.d = curve.degree();
  r.set_text = curve.set_text();
  r.monomials = curve.size();
  r.label = classify(curve);

  ReductionTrace trace(curve);
  r.rq_oracle = trace.reduction_number();
  const ResolutionSummary res = resolution_summary(curve, trace);
  r.reg = res.reg;
  r.c0 = res.c0;
  r.c1 = res.c1;
  r.num_generators = static_cast<std::int64_t>(res.generator_degrees.size());
  r.num_syzygies = static_cast<std::int64_t>(res.syzygy_degrees.size());
  r.rank = res.rank;
  r.is_cm = res.is_cm;

  r.closed_form = closed_form(curve, r.label);
  r.conjecture_value = conjecture_for(curve, r.label);
  r.buchsbaum_case_c = buchsbaum_for(curve, r.label);
  r.checks = derive_checks(r);
  return r;
}

std::optional<std::string> validate_report(const CurveReport& report) {
  const MonomialCurve curve = MonomialCurve::parse(report.d, report.set_text);
  if (curve.set_text() != report.set_text) return "set text is not canonical";
  if (curve.size() != report.monomials) return "monomial count disagrees with set text";
  const CaseLabel label = classify(curve);
  if (!(label == report.label)) return "case label disagrees with set text";
  if (closed_form(curve, label) != report.closed_form) return "closed form disagrees with recomputation";
  if (conjecture_for(curve, label) != report.conjecture_value) return "conjecture value disagrees";
  if (buchsbaum_for(curve, label) != report.buchsbaum_case_c) return "Buchsbaum flag disagrees";
  if (report.num_generators - report.num_syzygies != report.rank) return "generators - syzygies != rank";
  if (report.rank != curve.degree() / exponent_gcd(curve)) return "rank != d / gcd";
  if (report.is_cm != (report.num_syzygies == 0)) return "is_cm disagrees with syzygy count";
  if (report.reg != (report.c1 ? std::max(report.c0, *report.c1 - 1) : report.c0)) {
    return "reg != max(c0, c1 - 1)";
  }
  if (!(derive_checks(report) == report.checks)) return "check block disagrees with data fields";
  return std::nullopt;
}

bool exceeds_glp_bound(const CurveReport& report) { return report.reg > report.d - report.monomials + 2; }

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const CurveReport& r) {
  nlohmann::json formula = nullptr;
  if (r.closed_form) {
    formula = {{"value", r.closed_form->value},
               {"source", std::string(to_string(r.closed_form->source))},
               {"asserts_regularity", r.closed_form->asserts_regularity},
               {"conjectural", r.closed_form->conjectural}};
  }
  return {
      {"d", r.d},
      {"set", r.set_text},
      {"monomials", r.monomials},
      {"case", std::string(to_string(r.label.kind))},
      {"mirrored", r.label.mirrored},
      {"params", r.label.params_text()},
      {"rq_oracle", r.rq_oracle},
      {"closed_form", formula},
      {"conjecture_value", optional_json(r.conjecture_value)},
      {"reg", r.reg},
      {"c0", r.c0},
      {"c1", optional_json(r.c1)},
      {"num_generators", r.num_generators},
      {"num_syzygies", r.num_syzygies},
      {"rank", r.rank},
      {"is_cm", r.is_cm},
      {"buchsbaum_case_c", optional_json(r.buchsbaum_case_c)},
      {"checks",
       {{"c0_equals_rq", r.checks.c0_equals_rq},
        {"reg_ge_rq", r.checks.reg_ge_rq},
        {"formula_matches", optional_json(r.checks.formula_matches)},
        {"conjecture_matches", optional_json(r.checks.conjecture_matches)},
        {"cm_matches", optional_json(r.checks.cm_matches)},
        {"buchsbaum_matches", optional_json(r.checks.buchsbaum_matches)}}},
  };
}

namespace {

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }
std::string cell(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string csv_header() {
  return "d,set,monomials,case,mirrored,params,rq_oracle,formula_value,formula_source,conjecture_value,"
         "reg,c0,c1,num_generators,num_syzygies,rank,is_cm,buchsbaum_case_c,"
         "c0_equals_rq,reg_ge_rq,formula_matches,conjecture_matches,cm_matches,buchsbaum_matches";
}

std::string to_csv_row(const CurveReport& r) {
  std::string row;
  auto put = [&row](const std::string& v) {
    if (!row.empty()) row += ',';
    row += v;
  };
  put(std::to_string(r.d));
  put('"' + r.set_text + '"');
  put(std::to_string(r.monomials));
  put(std::string(to_string(r.label.kind)));
  put(cell(r.label.mirrored));
  put(r.label.params_text());
  put(std::to_string(r.rq_oracle));
  put(r.closed_form ? std::to_string(r.closed_form->value) : "");
  put(r.closed_form ? std::string(to_string(r.closed_form->source)) : "");
  put(cell(r.conjecture_value));
  put(std::to_string(r.reg));
  put(std::to_string(r.c0));
  put(cell(r.c1));
  put(std::to_string(r.num_generators));
  put(std::to_string(r.num_syzygies));
  put(std::to_string(r.rank));
  put(cell(r.is_cm));
  put(cell(r.buchsbaum_case_c));
  put(cell(r.checks.c0_equals_rq));
  put(cell(r.checks.reg_ge_rq));
  put(cell(r.checks.formula_matches));
  put(cell(r.checks.conjecture_matches));
  put(cell(r.checks.cm_matches));
  put(cell(r.checks.buchsbaum_matches));
  return row;
}

}  // namespace monocurve
