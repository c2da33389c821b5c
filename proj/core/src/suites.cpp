#include <chrono>
#include <functional>
#include <atomic>
#include <thread>

#include "balg/atom_model.hpp"
#include "balg/bands.hpp"
#include "balg/checks.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "balg/verify.hpp"

namespace balg {
namespace {

using Body = std::function<void(SuiteResult&, Rng&)>;

struct Job {
  std::string suite;
  std::string target;
  Body body;
};

const char* const kDisjunction =
    "A = {0} | B = {0} | A finite and B complete | B finite and A complete";
const char* const kInfiniteCompleteFactor =
    "unverifiable: complete infinite algebras are not finitely representable";
constexpr std::size_t kCertificateSteps = 5;
constexpr std::size_t kMaxModelDim = 16;

void skip(SuiteResult& r, std::string reason) {
  r.status = SuiteStatus::skipped;
  r.info.emplace_back("skipped", std::move(reason));
}

bool is_finite_nontrivial(const Algebra& a) {
  return a.kind() == AlgebraKind::powerset && !a.is_trivial();
}

void attach_certificate(SuiteResult& r, Certificate c) {
  Verdict check = validate_certificate(c);
  r.info.emplace_back("certificate_revalidated", check.pass ? "true" : "false");
  r.verdict.merge(std::move(check));
  r.certificate = std::move(c);
}

// ------------------------------------------------------------- per algebra

void core_axioms(const Algebra& a, std::size_t trials, SuiteResult& r, Rng& rng) {
  r.verdict.merge(check_boolean_axioms(a, trials, rng));
  if (is_finite_nontrivial(a)) {
    r.verdict.merge(check_atoms(a));
    r.verdict.merge(check_evaluate_oracle(a, trials, rng));
  }
  if (a.kind() == AlgebraKind::finite_cofinite) {
    ++r.verdict.checks;
    if (!(evaluate(a, "cof{1} & cof{2}") == Elem(IndexSet{true, {1, 2}})) ||
        a.leq(evaluate(a, "cof{1}"), evaluate(a, "fin{0,2}")) ||
        !(a.join(evaluate(a, "fin{0}"), evaluate(a, "cof{0}")) == a.one()))
      r.verdict.fail({"finite-cofinite examples", {}});
  }
}

void homomorphisms(const Algebra& a, const std::string& fixture, std::size_t trials,
                   SuiteResult& r, Rng& rng) {
  if (fixture == "broken_homomorphism") {
    r.info.emplace_back("fixture", fixture);
    const HomSpec h = broken_homomorphism(a);
    const bool exhaustive = a.kind() == AlgebraKind::powerset && a.atom_count() <= 12;
    r.verdict.merge(hom_verdict(h, check_homomorphism(h, exhaustive, trials, rng),
                                "constant 1 (fixture)"));
    return;
  }
  r.verdict.merge(check_homomorphism_samples(a, trials, rng));
}

void place_addition(const Algebra& a, std::size_t trials, SuiteResult& r, Rng& rng) {
  const PlaceSpace space(a);
  r.verdict.merge(check_addition_oracle(space, trials, rng));
  if (!r.verdict.pass) return;
  r.verdict.merge(check_riesz_axioms(space, trials, rng));
  if (!r.verdict.pass) return;
  r.verdict.merge(check_chi_isomorphism(space, trials, rng));
}

void regularity(const Algebra& a, std::size_t trials, SuiteResult& r, Rng& rng) {
  const PlaceSpace space(a);
  r.verdict.merge(check_regularity_samples(space, std::max<std::size_t>(trials / 10, 5), rng));
}

void bands(const Algebra& a, const std::vector<const AlgebraConfig*>& all, std::size_t trials,
           SuiteResult& r, Rng& rng) {
  if (!is_finite_nontrivial(a)) {
    skip(r, "bands are modeled for nontrivial finite-dimensional spaces only");
    return;
  }
  const std::size_t n = static_cast<std::size_t>(a.atom_count());
  r.verdict.merge(check_bands(n, trials, rng));
  for (const AlgebraConfig* other : all) {
    if (!r.verdict.pass) return;
    if (!is_finite_nontrivial(other->algebra)) continue;
    const std::size_t m = static_cast<std::size_t>(other->atoms);
    if (n * m > kMaxBandDim) continue;
    Verdict cmp = compare_band_products(n, m, std::max<std::size_t>(trials / 4, 4), rng);
    for (Witness& w : cmp.witnesses) w.fields.emplace(w.fields.begin(), "with", other->name);
    r.verdict.merge(std::move(cmp));
  }
}

void completeness(const AlgebraConfig& cfg, const Caps& caps, std::size_t trials,
                  SuiteResult& r, Rng& rng) {
  const Algebra& a = cfg.algebra;
  if (a.kind() == AlgebraKind::finite_cofinite) {
    attach_certificate(r, certify_evens(a, a.one(), kCertificateSteps));
    return;
  }
  if (a.atom_count() <= caps.max_subset_enum) {
    attach_certificate(r, check_finite_completeness(a, caps.max_subset_enum));
  } else {
    r.info.emplace_back("exhaustive_complete", "not run: atoms exceed caps.max_subset_enum");
  }
  if (a.is_trivial()) return;
  if (a.atom_count() <= 3) {
    r.verdict.merge(check_bounded_suprema_exhaustive(PlaceSpace(a), 3));
    r.info.emplace_back("bounded_suprema", "exhaustive over families of size <= 3");
  } else {
    r.verdict.merge(
        check_bounded_suprema_sampled(static_cast<std::size_t>(a.atom_count()), trials, rng));
    r.info.emplace_back("bounded_suprema", "sampled");
  }
}

// --------------------------------------------------------------- per pair

void free_product(const Algebra& a, const Algebra& b, std::size_t trials, SuiteResult& r,
                  Rng& rng) {
  const Algebra product = Algebra::free_product(a, b);
  r.verdict.merge(check_free_product(product, trials, rng));
  if (!r.verdict.pass) return;
  if (is_finite_nontrivial(a) && is_finite_nontrivial(b) &&
      a.atom_count() * b.atom_count() <= kMaxPowersetAtoms)
    r.verdict.merge(check_product_counts(a.atom_count(), b.atom_count()));
  for (int i = 0; i < 3 && r.verdict.pass; ++i)
    r.verdict.merge(check_induced_universal(product, std::max<std::size_t>(trials / 4, 4), rng));
}

void tensor_iso(const Algebra& a, const Algebra& b, const std::string& fixture,
                std::size_t trials, SuiteResult& r, Rng& rng) {
  if (a.is_trivial() || b.is_trivial()) {
    skip(r, "a trivial factor makes every space zero");
    return;
  }
  const PsiMap psi(a, b);
  if (fixture == "broken_bimorphism") {
    r.info.emplace_back("fixture", fixture);
    auto broken = [&psi](const PlaceFunction& f, const PlaceFunction& g) {
      return broken_bimorphism(psi, f, g);
    };
    r.verdict.merge(verify_bimorphism(broken, psi.left(), psi.right(), psi.product(), trials, rng));
    return;
  }
  r.verdict.merge(check_psi(psi, trials, rng));
  if (!r.verdict.pass) return;
  if (is_finite_nontrivial(a) && is_finite_nontrivial(b) &&
      static_cast<std::size_t>(a.atom_count() * b.atom_count()) <= kMaxModelDim) {
    r.verdict.merge(check_tensor_map(TensorMap(a, b), trials, rng));
    r.info.emplace_back("model", "atom-pair coordinates");
  } else {
    r.info.emplace_back("model", "none: bimorphism axioms and representation independence only");
  }
}

void universal_property(const Algebra& a, const Algebra& b, std::size_t trials, SuiteResult& r,
                        Rng& rng) {
  if (!is_finite_nontrivial(a) || !is_finite_nontrivial(b) ||
      static_cast<std::size_t>(a.atom_count() * b.atom_count()) > kMaxModelDim) {
    skip(r, "needs two nontrivial powerset factors with at most 16 atom pairs");
    return;
  }
  r.verdict.merge(check_universal_property_models(TensorMap(a, b), trials, rng));
}

std::string disjunction_label(const Algebra& a, const Algebra& b) {
  if (a.is_trivial()) return "A = {0}";
  if (b.is_trivial()) return "B = {0}";
  if (a.kind() == AlgebraKind::powerset && b.kind() == AlgebraKind::powerset)
    return "A finite and B complete";
  return "none: the free product is not complete";
}

void completeness_pair(const AlgebraConfig& ac, const AlgebraConfig& bc, std::size_t trials,
                       SuiteResult& r, Rng& rng) {
  const Algebra& a = ac.algebra;
  const Algebra& b = bc.algebra;
  r.info.emplace_back("disjunction", kDisjunction);
  r.info.emplace_back("holds", disjunction_label(a, b));
  r.info.emplace_back("infinite_complete_factor", kInfiniteCompleteFactor);
  if (a.is_trivial() || b.is_trivial()) return;

  const bool fa = a.kind() == AlgebraKind::powerset, fb = b.kind() == AlgebraKind::powerset;
  if (fa && fb) {
    const std::size_t dim = static_cast<std::size_t>(a.atom_count() * b.atom_count());
    if (a.atom_count() <= 3 && b.atom_count() <= 3) {
      r.verdict.merge(check_bounded_suprema_sampled(dim, trials, rng));
      r.info.emplace_back("bounded_suprema", "sampled on the atom-pair model");
    } else {
      r.info.emplace_back("bounded_suprema", "not run: factors above 3 atoms");
    }
    return;
  }
  if (!fa && !fb) {
    const Algebra product = Algebra::free_product(a, b);
    attach_certificate(r, certify_diagonal(product, product.one(), kCertificateSteps));
    return;
  }
  const AlgebraConfig& infinite = fa ? bc : ac;
  r.info.emplace_back("incomplete_factor", infinite.name);
  attach_certificate(r, certify_evens(infinite.algebra, infinite.algebra.one(), kCertificateSteps));
}

// ------------------------------------------------------------------ plans

std::vector<const AlgebraConfig*> selected(const SuiteConfig& cfg, const SuiteRequest& req) {
  std::vector<const AlgebraConfig*> out;
  if (req.algebras.empty()) {
    for (const AlgebraConfig& a : cfg.algebras) out.push_back(&a);
    return out;
  }
  for (const std::string& name : req.algebras) {
    const AlgebraConfig* found = nullptr;
    for (const AlgebraConfig& a : cfg.algebras)
      if (a.name == name) found = &a;
    if (!found) throw ConfigError("suite " + req.name + ": undeclared algebra '" + name + "'");
    out.push_back(found);
  }
  return out;
}

std::vector<Job> plan(const SuiteConfig& cfg, const SuiteRequest& req) {
  const auto algs = selected(cfg, req);
  const std::size_t trials = cfg.trials;
  const std::string& s = req.name;
  std::vector<Job> jobs;

  auto per_algebra = [&](auto body) {
    for (const AlgebraConfig* a : algs)
      jobs.push_back({s, a->name, [a, body](SuiteResult& r, Rng& rng) { body(*a, r, rng); }});
  };
  auto per_pair = [&](auto body) {
    for (std::size_t i = 0; i < algs.size(); ++i)
      for (std::size_t j = i; j < algs.size(); ++j) {
        const AlgebraConfig* a = algs[i];
        const AlgebraConfig* b = algs[j];
        jobs.push_back({s, a->name + "*" + b->name,
                        [a, b, body](SuiteResult& r, Rng& rng) { body(*a, *b, r, rng); }});
      }
  };

  if (s == "core_axioms") {
    per_algebra([trials](const AlgebraConfig& a, SuiteResult& r, Rng& rng) {
      core_axioms(a.algebra, trials, r, rng);
    });
  } else if (s == "homomorphisms") {
    const std::string fixture = req.fixture;
    per_algebra([trials, fixture](const AlgebraConfig& a, SuiteResult& r, Rng& rng) {
      homomorphisms(a.algebra, fixture, trials, r, rng);
    });
  } else if (s == "place_addition") {
    per_algebra([trials](const AlgebraConfig& a, SuiteResult& r, Rng& rng) {
      place_addition(a.algebra, trials, r, rng);
    });
  } else if (s == "regularity") {
    per_algebra([trials](const AlgebraConfig& a, SuiteResult& r, Rng& rng) {
      regularity(a.algebra, trials, r, rng);
    });
  } else if (s == "bands") {
    per_algebra([trials, algs](const AlgebraConfig& a, SuiteResult& r, Rng& rng) {
      bands(a.algebra, algs, trials, r, rng);
    });
  } else if (s == "completeness") {
    const Caps caps = cfg.caps;
    per_algebra([trials, caps](const AlgebraConfig& a, SuiteResult& r, Rng& rng) {
      completeness(a, caps, trials, r, rng);
    });
    per_pair([trials](const AlgebraConfig& a, const AlgebraConfig& b, SuiteResult& r, Rng& rng) {
      completeness_pair(a, b, trials, r, rng);
    });
  } else if (s == "free_product") {
    per_pair([trials](const AlgebraConfig& a, const AlgebraConfig& b, SuiteResult& r, Rng& rng) {
      free_product(a.algebra, b.algebra, trials, r, rng);
    });
  } else if (s == "tensor_iso") {
    const std::string fixture = req.fixture;
    per_pair([trials, fixture](const AlgebraConfig& a, const AlgebraConfig& b, SuiteResult& r,
                               Rng& rng) { tensor_iso(a.algebra, b.algebra, fixture, trials, r, rng); });
  } else if (s == "universal_property") {
    per_pair([trials](const AlgebraConfig& a, const AlgebraConfig& b, SuiteResult& r, Rng& rng) {
      universal_property(a.algebra, b.algebra, trials, r, rng);
    });
  } else {
    throw ConfigError("unknown suite '" + s + "'");
  }
  return jobs;
}

SuiteResult execute(const SuiteConfig& cfg, const Job& job) {
  SuiteResult r;
  r.name = job.suite;
  r.target = job.target;
  Rng rng(derive_seed(cfg.seed, job.suite + "/" + job.target));
  const auto start = std::chrono::steady_clock::now();
  try {
    job.body(r, rng);
  } catch (const std::exception& e) {
    r.verdict.fail({"error", {{"what", e.what()}}});
  }
  if (!r.verdict.pass) r.status = SuiteStatus::fail;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace

bool Report::pass() const {
  return std::none_of(suites.begin(), suites.end(),
                      [](const SuiteResult& r) { return r.status == SuiteStatus::fail; });
}

std::vector<SuiteResult> run_one(const SuiteConfig& cfg, const SuiteRequest& request) {
  std::vector<SuiteResult> out;
  for (const Job& job : plan(cfg, request)) out.push_back(execute(cfg, job));
  return out;
}

Report run_suite(const SuiteConfig& cfg, bool parallel) {
  std::vector<Job> jobs;
  for (const SuiteRequest& req : cfg.suites)
    for (Job& job : plan(cfg, req)) jobs.push_back(std::move(job));

  Report report;
  report.config = cfg;
  if (!parallel) {
    for (const Job& job : jobs) report.suites.push_back(execute(cfg, job));
    return report;
  }
  report.suites.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      report.suites[i] = execute(cfg, jobs[i]);
  };
  const std::size_t width =
      std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (std::size_t i = 1; i < width; ++i) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return report;
}

}  // namespace balg
