// Acceptance run: one line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "balg/atom_model.hpp"
#include "balg/bands.hpp"
#include "balg/certificate.hpp"
#include "balg/checks.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "balg/verify.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from(const Verdict& v, const std::string& what) {
  if (v.pass) return {true, what + ", " + std::to_string(v.checks) + " checks"};
  std::string why = what + ": ";
  if (!v.witnesses.empty()) {
    why += v.witnesses.back().label;
    for (const auto& [k, val] : v.witnesses.back().fields) why += " " + k + "=" + val;
  }
  return {false, why};
}

Outcome addition_oracle() {
  Rng rng(derive_seed(1, "addition"));
  std::size_t pairs = 0;
  for (const Algebra& a : {Algebra::powerset(3), Algebra::powerset(5), Algebra::powerset(8),
                           Algebra::finite_cofinite()}) {
    const PlaceSpace c(a);
    const std::uint64_t points = a.kind() == AlgebraKind::powerset ? a.atom_count() : 24;
    for (int i = 0; i < 2000; ++i, ++pairs) {
      const PlaceFunction f = c.random(rng), g = c.random(rng);
      const PlaceFunction sum = c.add_formula(f, g);
      if (!(sum == c.add_refine(f, g)))
        return {false, "add_formula != add_refine over " + a.describe() + " at f = " + c.format(f) +
                           ", g = " + c.format(g)};
      for (std::uint64_t p = 0; p < points; ++p)
        if (oracle::value(sum, p) != oracle::value(f, p) + oracle::value(g, p))
          return {false, "pointwise sum differs over " + a.describe()};
    }
  }
  return {true, std::to_string(pairs) + " pairs over P3, P5, P8, FC"};
}

Outcome chi_isomorphism() {
  Verdict all;
  Rng rng(derive_seed(2, "chi"));
  for (int n = 1; n <= 5; ++n) all.merge(check_chi_isomorphism(PlaceSpace(Algebra::powerset(n)), 0, rng));
  return from(all, "exhaustive over P1..P5");
}

Outcome free_product_structure() {
  Verdict all;
  std::size_t pairs = 0;
  for (int n = 1; n <= 16; ++n)
    for (int m = 1; n * m <= 16; ++m, ++pairs) all.merge(check_product_counts(n, m));
  if (!all.pass) return from(all, "counts");

  Rng rng(derive_seed(3, "decompose"));
  std::size_t elements = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4);
    const Algebra ab = Algebra::free_product(Algebra::powerset(n), Algebra::powerset(m));
    const Elem x = random_elem(ab, rng);
    std::uint64_t seen = 0;
    for (const Rectangle& r : decompose_disjoint(ab, x)) {
      const std::uint64_t piece = oracle::pair_mask(rectangle(ab, r.left, r.right), n, m);
      if (piece == 0 || (piece & seen) != 0)
        return {false, "decomposition not disjoint at " + format_elem(ab, x)};
      seen |= piece;
    }
    if (seen != oracle::pair_mask(x, n, m))
      return {false, "decomposition does not rejoin at " + format_elem(ab, x)};
    ++elements;
  }
  return {true, std::to_string(pairs) + " (n,m) pairs, " + std::to_string(elements) +
                    " decompositions"};
}

Outcome universal_property() {
  Rng rng(derive_seed(4, "induced"));
  Verdict all;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3);
    all.merge(check_induced_universal(
        Algebra::free_product(Algebra::powerset(n), Algebra::powerset(m)), 20, rng));
    if (!all.pass) break;
  }
  return from(all, "100 random factor-map pairs");
}

Outcome tensor_map() {
  Rng rng(derive_seed(5, "tensor"));
  Verdict all;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const TensorMap t = build_T(Algebra::powerset(n), Algebra::powerset(m));
      all.merge(check_tensor_map(t, 40, rng));
      if (rational_rank(t.matrix()) != static_cast<std::size_t>(n * m))
        return {false, "rank below n*m"};
    }
  return from(all, "16 pairs (n,m), n,m <= 4");
}

Outcome psi_cofinite() {
  Rng rng(derive_seed(6, "psi"));
  const Algebra fc = Algebra::finite_cofinite();
  return from(check_psi(PsiMap(fc, fc), 1000, rng), "FC x FC, 1000 trials");
}

Outcome completeness() {
  Verdict all;
  std::size_t subsets = 0;
  for (const Algebra& a : {Algebra::trivial(), Algebra::powerset(1), Algebra::powerset(2),
                           Algebra::powerset(3), Algebra::powerset(4)}) {
    const Certificate c = check_finite_completeness(a);
    subsets += c.subsets_checked;
    all.merge(validate_certificate(c));
  }
  for (int n = 1; n <= 3; ++n)
    all.merge(check_bounded_suprema_exhaustive(PlaceSpace(Algebra::powerset(n)), 3));
  const Algebra fc = Algebra::finite_cofinite();
  const Certificate evens = certify_evens(fc, fc.one(), 5);
  const Algebra ff = Algebra::free_product(fc, fc);
  const Certificate diag = certify_diagonal(ff, ff.one(), 5);
  all.merge(validate_certificate(evens));
  all.merge(validate_certificate(diag));
  if (evens.steps.size() < 3 || diag.steps.size() < 3) return {false, "fewer than 3 steps"};
  return from(all, std::to_string(subsets) + " subsets, evens and diagonal chains of 5");
}

Outcome bands() {
  Rng rng(derive_seed(8, "bands"));
  const AtomSpace e(8);
  for (int i = 0; i < 1000; ++i) {
    const auto [f, g] = e.random_disjoint_pair(rng);
    if (!bands_disjoint(f, g)) return {false, "bands not disjoint for " + e.format(f)};
  }
  for (std::size_t n = 1; n <= 10; ++n)
    if (all_bands(n).size() != (std::size_t{1} << n)) return {false, "band count"};
  Verdict all;
  for (std::size_t n = 1; n <= 16; ++n)
    for (std::size_t m = 1; n * m <= 16; ++m) all.merge(compare_band_products(n, m, 20, rng));
  return from(all, "1000 disjoint pairs, counts to n = 10, products n*m <= 16");
}

Outcome negative_controls() {
  for (const char* text :
       {R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 2}],
            "suites": [{"name": "tensor_iso", "fixture": "broken_bimorphism"}], "seed": 9})",
        R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 3}],
            "suites": [{"name": "homomorphisms", "fixture": "broken_homomorphism"}], "seed": 9})"}) {
    const Report r = run_suite(parse_config(text));
    if (r.pass() || r.suites.empty() || r.suites[0].verdict.witnesses.empty())
      return {false, "a broken fixture was accepted"};
    const std::string json = render_report(r, ReportFormat::json);
    if (json.find("\"fields\": {}") != std::string::npos)
      return {false, "counterexample serialized without fields"};
  }
  return {true, "both fixtures rejected with serialized counterexamples"};
}

Outcome reproducibility() {
  const SuiteConfig cfg = parse_config(R"({
    "algebras": [{"name": "A", "kind": "powerset", "atoms": 2},
                 {"name": "B", "kind": "powerset", "atoms": 3},
                 {"name": "N", "kind": "finite_cofinite"}],
    "suites": ["core_axioms", "homomorphisms", "place_addition", "regularity", "bands",
               "completeness", "free_product", "tensor_iso", "universal_property"],
    "trials": 30, "seed": 2024})");
  const std::string a = render_report(run_suite(cfg), ReportFormat::json, false);
  const std::string b = render_report(run_suite(cfg), ReportFormat::json, false);
  const std::string c = render_report(run_suite(cfg, false), ReportFormat::json, false);
  if (a != b || a != c) return {false, "reports differ"};
  return {true, std::to_string(a.size()) + " identical bytes over 3 runs"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "addition oracle equivalence", 5000, addition_oracle},
      {2, "chi isomorphism", 2000, chi_isomorphism},
      {3, "free product structure", 10000, free_product_structure},
      {4, "universal property of the free product", 5000, universal_property},
      {5, "tensor map onto and injective", 10000, tensor_map},
      {6, "psi bimorphism on cofinite pairs", 10000, psi_cofinite},
      {7, "completeness dichotomy", 5000, completeness},
      {8, "bands", 5000, bands},
      {9, "negative controls", 0, negative_controls},
      {10, "reproducibility", 0, reproducibility},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool ok = o.pass && in_time;
    failed += ok ? 0 : 1;
    char timing[64];
    if (c.limit_ms > 0)
      std::snprintf(timing, sizeof timing, "%.0f ms / %.0f ms", ms, c.limit_ms);
    else
      std::snprintf(timing, sizeof timing, "%.0f ms", ms);
    std::printf("[%s] %2d %-40s %-22s %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, timing,
                o.detail.c_str(), in_time ? "" : " (over time limit)");
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
