#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "balg/expr.hpp"
#include "balg/verify.hpp"

namespace balg {
namespace {

using json = nlohmann::ordered_json;

const char* status_text(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::skipped: return "skipped";
  }
  return "";
}

std::string defect_text(const std::vector<std::uint64_t>& d) {
  if (d.size() == 1) return std::to_string(d[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

json grid_json(const Algebra& product, const Elem& x) {
  const GridText g = grid_text(product, x);
  return json{{"left_cells", g.left_cells}, {"right_cells", g.right_cells}, {"matrix", g.matrix}};
}

json config_json(const SuiteConfig& cfg) {
  json algebras = json::array();
  for (const AlgebraConfig& a : cfg.algebras) {
    json entry{{"name", a.name}, {"kind", a.kind}};
    if (a.kind == "powerset" && !a.trivial) entry["atoms"] = a.atoms;
    if (a.trivial) entry["trivial"] = true;
    algebras.push_back(std::move(entry));
  }
  json suites = json::array();
  for (const SuiteRequest& s : cfg.suites) {
    if (s.algebras.empty() && s.fixture.empty()) {
      suites.push_back(s.name);
      continue;
    }
    json entry{{"name", s.name}};
    if (!s.algebras.empty()) entry["algebras"] = s.algebras;
    if (!s.fixture.empty()) entry["fixture"] = s.fixture;
    suites.push_back(std::move(entry));
  }
  return json{{"algebras", std::move(algebras)},
              {"suites", std::move(suites)},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"caps", {{"max_atoms", cfg.caps.max_atoms},
                        {"max_subset_enum", cfg.caps.max_subset_enum}}}};
}

json certificate_json(const Certificate& c) {
  json out{{"kind", to_string(c.kind)}, {"algebra", c.algebra.describe()}, {"family", c.family}};
  if (c.kind == CertificateKind::exhaustive_complete) {
    out["subsets_checked"] = c.subsets_checked;
    return out;
  }
  json steps = json::array();
  for (const ImprovementStep& s : c.steps) {
    json step{{"u", format_elem(c.algebra, s.u)},
              {"defect", defect_text(s.defect)},
              {"u_prime", format_elem(c.algebra, s.improved)}};
    if (c.algebra.kind() == AlgebraKind::free_product)
      step["u_prime_grid"] = grid_json(c.algebra, s.improved);
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  return out;
}

json witness_json(const Witness& w) {
  json fields = json::object();
  for (const auto& [k, v] : w.fields) fields[k] = v;
  return json{{"label", w.label}, {"fields", std::move(fields)}};
}

json result_json(const SuiteResult& r, bool timing) {
  json out{{"name", r.name},
           {"target", r.target},
           {"verdict", status_text(r.status)},
           {"checks", r.verdict.checks}};
  json witnesses = json::array();
  for (const Witness& w : r.verdict.witnesses) witnesses.push_back(witness_json(w));
  out["witnesses"] = std::move(witnesses);
  for (const auto& [k, v] : r.info) out[k] = v;
  if (r.certificate) out["certificate"] = certificate_json(*r.certificate);
  if (timing) out["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
  return out;
}

std::string render_text(const Report& report, bool timing) {
  std::ostringstream os;
  os << "balg report v" << kReportVersion << " (seed " << report.config.seed << ", trials "
     << report.config.trials << ")\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const SuiteResult& r : report.suites) {
    switch (r.status) {
      case SuiteStatus::pass: ++passed; break;
      case SuiteStatus::fail: ++failed; break;
      case SuiteStatus::skipped: ++skipped; break;
    }
    std::string tag = status_text(r.status);
    for (char& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "[" << tag << "] " << r.name << " " << r.target << "  checks=" << r.verdict.checks;
    if (timing) os << "  " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
    os << "\n";
    for (const auto& [k, v] : r.info) os << "    " << k << ": " << v << "\n";
    for (const Witness& w : r.verdict.witnesses) {
      os << "    " << w.label;
      const char* sep = ": ";
      for (const auto& [k, v] : w.fields) {
        os << sep << k << " = " << v;
        sep = ", ";
      }
      os << "\n";
    }
    if (r.certificate) {
      const Certificate& c = *r.certificate;
      os << "    certificate " << to_string(c.kind) << " over " << c.algebra.describe() << ", "
         << c.family;
      if (c.kind == CertificateKind::exhaustive_complete)
        os << ", " << c.subsets_checked << " subsets";
      os << "\n";
      for (const ImprovementStep& s : c.steps)
        os << "      u = " << format_elem(c.algebra, s.u) << "   defect " << defect_text(s.defect)
           << "   u' = " << format_elem(c.algebra, s.improved) << "\n";
    }
  }
  os << "summary: " << passed << " pass, " << failed << " fail, " << skipped << " skipped\n";
  return os.str();
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::text) return render_text(report, include_timing);
  json suites = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const SuiteResult& r : report.suites) {
    suites.push_back(result_json(r, include_timing));
    (r.status == SuiteStatus::pass ? passed : r.status == SuiteStatus::fail ? failed : skipped)++;
  }
  json doc{{"version", kReportVersion},
           {"config_echo", config_json(report.config)},
           {"suites", std::move(suites)},
           {"summary", {{"pass", passed}, {"fail", failed}, {"skipped", skipped}}}};
  return doc.dump(2) + "\n";
}

}  // namespace balg
