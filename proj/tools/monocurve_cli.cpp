// monocurve: reduction numbers and regularity of projective monomial curves.
//
//   monocurve compute --degree 7 --set "0,2,6,7"
//   monocurve sweep --max-degree 30 --cases A --out a.jsonl
//   monocurve verify --max-degree 12
//
// Exit codes: 0 success, 1 formula mismatch or invariant violation, 2 usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "monocurve/curve.hpp"
#include "monocurve/report.hpp"
#include "monocurve/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<monocurve::CaseKind> parse_cases(const std::string& text) {
  std::vector<monocurve::CaseKind> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto kind = monocurve::parse_case_kind(token);
    if (!kind) throw monocurve::CurveError("unknown case '" + token + "' (expected A,Bpoint,B,C,D,E,General)");
    out.push_back(*kind);
  }
  return out;
}

int run_compute(std::int64_t degree, const std::string& set_text, const std::string& format) {
  const monocurve::MonomialCurve curve = monocurve::MonomialCurve::parse(degree, set_text);
  const monocurve::CurveReport report = monocurve::build_report(curve);
  if (format == "csv") {
    std::cout << monocurve::csv_header() << '\n' << monocurve::to_csv_row(report) << '\n';
  } else {
    std::cout << monocurve::to_json(report).dump(2) << '\n';
  }
  return kExitOk;
}

int run_sweep(const monocurve::SweepOptions& options, const std::string& out_path, const std::string& format) {
  const monocurve::SweepResult result = monocurve::run_sweep(options);
  const std::string body = format == "csv" ? monocurve::render_csv(result) : monocurve::render_json_lines(result);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << body;
  }
  std::cerr << result.summary.to_text();
  return result.summary.ok() ? kExitOk : kExitViolation;
}

int run_verify(std::int64_t max_degree, unsigned jobs, const std::string& fault_name) {
  monocurve::InjectedFault fault = monocurve::InjectedFault::None;
  if (fault_name == "reduction") fault = monocurve::InjectedFault::ReductionOffByOne;
  if (fault_name == "syzygies") fault = monocurve::InjectedFault::DropSyzygies;
  if (fault_name == "mirror") fault = monocurve::InjectedFault::BreakMirror;

  const monocurve::VerifyResult result = monocurve::run_verify(max_degree, jobs, 3, fault);
  if (result.first_failure) {
    const auto& f = *result.first_failure;
    std::cout << "FAIL invariant " << f.violation.invariant << " at d=" << f.d << " set=" << f.set_text << ": "
              << f.violation.detail << '\n';
    return kExitViolation;
  }
  std::cout << "ok: " << result.curves_checked << " curves, all invariants hold\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction numbers and Castelnuovo-Mumford regularity of projective monomial curves"};
  app.require_subcommand(1);

  std::int64_t degree = 0;
  std::string set_text;
  std::string format = "json";
  auto* compute = app.add_subcommand("compute", "Analyse one curve");
  compute->add_option("--degree", degree, "Common degree d of the monomials")->required();
  compute->add_option("--set", set_text, "Exponent set, e.g. \"0,4-9\"")->required();
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  monocurve::SweepOptions sweep_options;
  sweep_options.jobs = default_jobs();
  std::string cases_text;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Cross-check formulas against the oracle over many curves");
  sweep->add_option("--max-degree", sweep_options.max_degree, "Largest degree d")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  sweep->add_option("--cases", cases_text, "Comma list of A,Bpoint,B,C,D,E,General");
  sweep->add_option("--max-intervals", sweep_options.max_intervals, "Maximal number of intervals")
      ->check(CLI::Range(1, 64));
  sweep->add_option("--jobs", sweep_options.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  sweep->add_option("--out", out_path, "Report file (default: stdout)");
  sweep->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  std::int64_t verify_degree = 2;
  unsigned verify_jobs = default_jobs();
  std::string fault_name;
  auto* verify = app.add_subcommand("verify", "Check structural invariants on all curves with <= 3 intervals");
  verify->add_option("--max-degree", verify_degree, "Largest degree d")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  verify->add_option("--inject-fault", fault_name)
      ->group("")
      ->check(CLI::IsMember({"reduction", "syzygies", "mirror"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return run_compute(degree, set_text, format);
    if (*sweep) {
      if (!cases_text.empty()) sweep_options.cases = parse_cases(cases_text);
      return run_sweep(sweep_options, out_path, format);
    }
    if (*verify) return run_verify(verify_degree, verify_jobs, fault_name);
  } catch (const monocurve::CurveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
