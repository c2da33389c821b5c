#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "balg/certificate.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/verify.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

ImprovementStep step_of(const Improvement& i) { return std::get<ImprovementStep>(i); }

}  // namespace

TEST(Config, Minimal) {
  const SuiteConfig cfg = parse_config(
      R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 2}], "suites": ["core_axioms"]})");
  ASSERT_EQ(cfg.algebras.size(), 1u);
  EXPECT_EQ(cfg.algebras[0].algebra, Algebra::powerset(2));
  ASSERT_EQ(cfg.suites.size(), 1u);
  EXPECT_EQ(cfg.suites[0].name, "core_axioms");
  EXPECT_EQ(cfg.trials, 200u);
}

TEST(Config, Errors) {
  EXPECT_NE(error_of(R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 20}],
                         "suites": ["core_axioms"]})")
                .find("cap exceeded"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 2}],
                         "suites": [{"name": "tensor_iso", "algebras": ["B"]}]})")
                .find("undeclared algebra"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algebras": [], "suites": [], "colour": 1})").find("colour"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algebras": [}")").find("syntax error"), std::string::npos);
  EXPECT_FALSE(error_of(R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 2}],
                            "suites": ["nonsense"]})")
                   .empty());
}

TEST(Completeness, FinitePowersets) {
  EXPECT_EQ(check_finite_completeness(Algebra::trivial()).subsets_checked, 1u);
  EXPECT_EQ(check_finite_completeness(Algebra::powerset(1)).subsets_checked, 3u);
  EXPECT_EQ(check_finite_completeness(Algebra::powerset(2)).subsets_checked, 15u);
  const Certificate c = check_finite_completeness(Algebra::powerset(3));
  EXPECT_EQ(c.kind, CertificateKind::exhaustive_complete);
  EXPECT_EQ(c.subsets_checked, 255u);
  EXPECT_TRUE(validate_certificate(c).pass);
  EXPECT_THROW(check_finite_completeness(Algebra::finite_cofinite()), AlgebraError);
}

TEST(Completeness, BoundedSupremaInPlaceFunctions) {
  for (int n = 1; n <= 3; ++n)
    EXPECT_TRUE(check_bounded_suprema_exhaustive(PlaceSpace(Algebra::powerset(n)), 2).pass) << n;
  Rng rng(1);
  EXPECT_TRUE(check_bounded_suprema_sampled(6, 100, rng).pass);
}

TEST(Certificate, EvensSteps) {
  const Algebra fc = Algebra::finite_cofinite();
  const ImprovementStep s = step_of(improve_upper_bound_evens(fc, fc.one()));
  EXPECT_EQ(s.improved, evaluate(fc, "cof{1}"));
  EXPECT_EQ(s.defect, std::vector<std::uint64_t>{1});

  const auto fin = improve_upper_bound_evens(fc, evaluate(fc, "fin{0,2,4}"));
  ASSERT_TRUE(std::holds_alternative<NotUpperBound>(fin));
  EXPECT_EQ(std::get<NotUpperBound>(fin).missed, std::vector<std::uint64_t>{6});
  const auto cof = improve_upper_bound_evens(fc, evaluate(fc, "cof{0}"));
  ASSERT_TRUE(std::holds_alternative<NotUpperBound>(cof));
  EXPECT_EQ(std::get<NotUpperBound>(cof).missed, std::vector<std::uint64_t>{0});
}

TEST(Certificate, EvensChainIsIndependentlyValid) {
  const Algebra fc = Algebra::finite_cofinite();
  const Certificate c = certify_evens(fc, fc.one(), 5);
  ASSERT_EQ(c.steps.size(), 5u);
  for (const ImprovementStep& s : c.steps) {
    // Every even still lies below u′, and u′ lost exactly the odd defect.
    for (std::uint64_t k = 0; k < 40; k += 2) ASSERT_TRUE(oracle::member(s.improved, k));
    ASSERT_TRUE(oracle::member(s.u, s.defect[0]));
    ASSERT_FALSE(oracle::member(s.improved, s.defect[0]));
    ASSERT_EQ(s.defect[0] % 2, 1u);
  }
  EXPECT_TRUE(validate_certificate(c).pass);
  EXPECT_THROW(certify_evens(fc, evaluate(fc, "fin{0,2,4}"), 3), AlgebraError);
}

TEST(Certificate, DiagonalSteps) {
  const Algebra fc = Algebra::finite_cofinite();
  const Algebra ff = Algebra::free_product(fc, fc);
  const ImprovementStep s = step_of(improve_upper_bound_diagonal(ff, ff.one()));
  EXPECT_EQ(s.defect, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(s.improved,
            ff.complement(rectangle(ff, evaluate(fc, "fin{0}"), evaluate(fc, "fin{1}"))));

  const Elem box = rectangle(ff, evaluate(fc, "fin{0,1}"), evaluate(fc, "fin{0,1}"));
  const auto miss = improve_upper_bound_diagonal(ff, box);
  ASSERT_TRUE(std::holds_alternative<NotUpperBound>(miss));
  EXPECT_EQ(std::get<NotUpperBound>(miss).missed, (std::vector<std::uint64_t>{2, 2}));
}

TEST(Certificate, DiagonalChainIsIndependentlyValid) {
  const Algebra fc = Algebra::finite_cofinite();
  const Algebra ff = Algebra::free_product(fc, fc);
  const Certificate c = certify_diagonal(ff, ff.one(), 5);
  ASSERT_EQ(c.steps.size(), 5u);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const ImprovementStep& s = c.steps[i];
    for (std::uint64_t n = 0; n < 30; ++n) ASSERT_TRUE(oracle::member(s.improved, n, n));
    const std::uint64_t p = s.defect[0], q = s.defect[1];
    ASSERT_NE(p, q);
    ASSERT_TRUE(oracle::member(s.u, p, q));
    ASSERT_FALSE(oracle::member(s.improved, p, q));
    if (i + 1 < c.steps.size()) ASSERT_EQ(c.steps[i + 1].u, s.improved);
  }
  EXPECT_TRUE(validate_certificate(c).pass);
}

TEST(Certificate, ValidatorRejectsTampering) {
  const Algebra fc = Algebra::finite_cofinite();
  Certificate c = certify_evens(fc, fc.one(), 3);
  c.steps[1].improved = c.steps[1].u;
  EXPECT_FALSE(validate_certificate(c).pass);

  Certificate d = certify_evens(fc, fc.one(), 3);
  d.steps[2].improved = fc.meet(d.steps[2].improved, evaluate(fc, "cof{4}"));
  EXPECT_FALSE(validate_certificate(d).pass);

  Certificate e = check_finite_completeness(Algebra::powerset(2));
  e.subsets_checked = 14;
  EXPECT_FALSE(validate_certificate(e).pass);
}

TEST(Verify, DefaultRunPassesAndIsReproducible) {
  const std::string text = R"({
    "algebras": [{"name": "A", "kind": "powerset", "atoms": 2},
                 {"name": "B", "kind": "powerset", "atoms": 3}],
    "suites": ["core_axioms", "homomorphisms", "place_addition", "regularity", "bands",
               "completeness", "free_product", "tensor_iso", "universal_property"],
    "trials": 40, "seed": 5})";
  const SuiteConfig cfg = parse_config(text);
  const Report first = run_suite(cfg);
  EXPECT_TRUE(first.pass());
  const Report second = run_suite(cfg, false);
  EXPECT_EQ(render_report(first, ReportFormat::json, false),
            render_report(second, ReportFormat::json, false));

  const auto doc = nlohmann::json::parse(render_report(first, ReportFormat::json));
  EXPECT_EQ(doc["version"], 1);
  EXPECT_TRUE(doc["suites"][0].contains("elapsed_ms"));
  EXPECT_EQ(doc["summary"]["fail"], 0);
}

TEST(Verify, CofiniteCompletenessCarriesCertificate) {
  const SuiteConfig cfg = parse_config(R"({
    "algebras": [{"name": "N", "kind": "finite_cofinite"}],
    "suites": ["completeness"], "trials": 10, "seed": 1})");
  const Report r = run_suite(cfg);
  ASSERT_TRUE(r.pass());
  bool saw = false;
  for (const SuiteResult& s : r.suites) {
    if (!s.certificate) continue;
    EXPECT_EQ(s.certificate->kind, CertificateKind::no_supremum);
    EXPECT_GE(s.certificate->steps.size(), 3u);
    saw = true;
  }
  EXPECT_TRUE(saw);
}

TEST(Verify, FixturesFailWithCounterexamples) {
  for (const char* text :
       {R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 2}],
            "suites": [{"name": "tensor_iso", "fixture": "broken_bimorphism"}], "seed": 3})",
        R"({"algebras": [{"name": "A", "kind": "powerset", "atoms": 2}],
            "suites": [{"name": "homomorphisms", "fixture": "broken_homomorphism"}], "seed": 3})"}) {
    const Report r = run_suite(parse_config(text));
    EXPECT_FALSE(r.pass());
    ASSERT_FALSE(r.suites.empty());
    EXPECT_EQ(r.suites[0].status, SuiteStatus::fail);
    ASSERT_FALSE(r.suites[0].verdict.witnesses.empty());
    const auto doc = nlohmann::json::parse(render_report(r, ReportFormat::json));
    EXPECT_FALSE(doc["suites"][0]["witnesses"][0]["fields"].empty());
  }
}
