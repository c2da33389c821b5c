#include <fstream>
#include <iostream>
#include <sstream>

#ifdef BALG_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "balg/certificate.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "balg/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw balg::ConfigError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_verify(const std::string& config_path, const std::string& report_path,
               const std::string& format, const std::optional<std::uint64_t>& seed) {
  balg::SuiteConfig cfg;
  try {
    cfg = balg::parse_config(read_file(config_path));
  } catch (const balg::ConfigError& e) {
    std::cerr << "balg: configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (seed) cfg.seed = *seed;
  const balg::Report report = balg::run_suite(cfg);
  const std::string text = balg::render_report(
      report, format == "text" ? balg::ReportFormat::text : balg::ReportFormat::json);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "balg: cannot write " << report_path << "\n";
      return kExitConfig;
    }
    out << text;
    std::cerr << (report.pass() ? "all suites pass" : "some suites failed") << "; report written to "
              << report_path << "\n";
  }
  return report.pass() ? kExitPass : kExitFail;
}

int run_eval(const std::string& spec, const std::string& expr) {
  const balg::Algebra a = balg::parse_algebra(spec);
  if (expr.find("chi(") != std::string::npos) {
    const balg::PlaceSpace space(a);
    std::cout << space.format(balg::parse_place_function(space, expr)) << "\n";
    return kExitPass;
  }
  const balg::Elem x = balg::evaluate(a, expr);
  std::cout << balg::format_elem(a, x) << "\n";
  if (a.kind() == balg::AlgebraKind::free_product && !a.is_trivial()) {
    const balg::GridText g = balg::grid_text(a, x);
    nlohmann::ordered_json grid{
        {"left_cells", g.left_cells}, {"right_cells", g.right_cells}, {"matrix", g.matrix}};
    std::cout << grid.dump() << "\n";
  }
  return kExitPass;
}

int run_certify(const std::string& target, const std::string& start, std::size_t steps) {
  const bool evens = target == "evens";
  const balg::Algebra fc = balg::Algebra::finite_cofinite();
  const balg::Algebra a = evens ? fc : balg::Algebra::free_product(fc, fc);
  const balg::Elem u = start.empty() ? a.one() : balg::evaluate(a, start);
  balg::Certificate c;
  try {
    c = evens ? balg::certify_evens(a, u, steps) : balg::certify_diagonal(a, u, steps);
  } catch (const balg::AlgebraError& e) {
    std::cout << "not_upper_bound: " << e.what() << "\n";
    return kExitFail;
  }
  const balg::Verdict check = balg::validate_certificate(c);
  std::cout << "certificate " << balg::to_string(c.kind) << " for " << c.family << " in "
            << a.describe() << "\n";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    std::string defect;
    for (std::uint64_t n : s.defect) defect += (defect.empty() ? "" : ",") + std::to_string(n);
    std::cout << "step " << i + 1 << ": u = " << balg::format_elem(a, s.u) << "  defect ("
              << defect << ")  u' = " << balg::format_elem(a, s.improved) << "\n";
  }
  std::cout << "independent re-check: " << (check.pass ? "pass" : "FAIL") << " (" << check.checks
            << " checks)\n";
  return check.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean algebras, place functions and Riesz tensor products: verification CLI"};
  app.require_subcommand(1);

  std::string config_path, report_path, format = "json";
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "Run the configured verification suites");
  verify->add_option("--config", config_path, "JSON configuration file")->required();
  verify->add_option("--report", report_path, "Write the report here instead of stdout");
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--seed", seed, "Override the configured seed");

  std::string spec, expr;
  auto* eval = app.add_subcommand("eval", "Evaluate an element or place-function expression");
  eval->add_option("--algebra", spec, "Algebra, e.g. P3, FC or P2*P2")->required();
  eval->add_option("--expr", expr, "Expression")->required();

  std::string target, start;
  std::size_t steps = 5;
  auto* certify = app.add_subcommand("certify", "Produce a no_supremum certificate");
  certify->add_option("--target", target, "Witness family")
      ->required()
      ->check(CLI::IsMember({"evens", "diagonal"}));
  certify->add_option("--start", start, "Initial upper bound (default 1)");
  certify->add_option("--steps", steps, "Number of improvement steps")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) return run_verify(config_path, report_path, format, seed);
    if (*eval) return run_eval(spec, expr);
    return run_certify(target, start, steps);
  } catch (const balg::ParseError& e) {
    std::cerr << "balg: parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const balg::AlgebraError& e) {
    std::cerr << "balg: " << e.what() << "\n";
    return kExitConfig;
  } catch (const balg::ConfigError& e) {
    std::cerr << "balg: configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
}
