#include <gtest/gtest.h>

#include "balg/algebra.hpp"
#include "balg/checks.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/homomorphism.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

Elem ev(const Algebra& a, const char* text) { return evaluate(a, text); }

}  // namespace

TEST(Powerset, OrderAndRelativeComplement) {
  const Algebra p3 = Algebra::powerset(3);
  EXPECT_TRUE(p3.leq(ev(p3, "{1}"), ev(p3, "{1,2}")));
  EXPECT_FALSE(p3.leq(ev(p3, "{1,3}"), ev(p3, "{1,2}")));
  EXPECT_EQ(p3.rel_complement_1(ev(p3, "{1,2}"), ev(p3, "{2,3}")), ev(p3, "{1}"));

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Elem x = random_elem(p3, rng);
    EXPECT_TRUE(p3.leq(p3.zero(), x));
    EXPECT_EQ(p3.rel_complement_1(x, p3.zero()), x);
    EXPECT_TRUE(p3.is_zero(p3.rel_complement_1(x, x)));
  }
}

TEST(Powerset, Atoms) {
  const Algebra p3 = Algebra::powerset(3);
  const std::vector<Elem> want{ev(p3, "{1}"), ev(p3, "{2}"), ev(p3, "{3}")};
  EXPECT_EQ(p3.atoms(), want);
  const Algebra p1 = Algebra::powerset(1);
  EXPECT_EQ(p1.atoms(), std::vector<Elem>{ev(p1, "{1}")});
  EXPECT_THROW(Algebra::trivial().atoms(), AlgebraError);
}

TEST(Powerset, SupFinite) {
  const Algebra p3 = Algebra::powerset(3);
  const std::vector<Elem> xs{ev(p3, "{1}"), ev(p3, "{2}")};
  EXPECT_EQ(p3.sup_finite(xs), ev(p3, "{1,2}"));
  const std::vector<Elem> one{ev(p3, "{3}")};
  EXPECT_EQ(p3.sup_finite(one), ev(p3, "{3}"));
  EXPECT_THROW(p3.sup_finite(std::span<const Elem>{}), AlgebraError);

  const Algebra fc = Algebra::finite_cofinite();
  const std::vector<Elem> split{ev(fc, "fin{0}"), ev(fc, "cof{0}")};
  EXPECT_EQ(fc.sup_finite(split), fc.one());
}

TEST(FiniteCofinite, OpsAgreeWithPointMembership) {
  const Algebra fc = Algebra::finite_cofinite();
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Elem x = random_elem(fc, rng), y = random_elem(fc, rng);
    const Elem m = fc.meet(x, y), j = fc.join(x, y), c = fc.complement(x),
               d = fc.disjoint_sum(x, y);
    for (std::uint64_t n = 0; n < 2 * kSampleIndexRange; ++n) {
      const bool a = oracle::member(x, n), b = oracle::member(y, n);
      ASSERT_EQ(oracle::member(m, n), a && b);
      ASSERT_EQ(oracle::member(j, n), a || b);
      ASSERT_EQ(oracle::member(c, n), !a);
      ASSERT_EQ(oracle::member(d, n), a != b);
    }
  }
}

TEST(Algebra, BooleanAxiomsOnEveryBackend) {
  Rng rng(3);
  for (const Algebra& a : {Algebra::trivial(), Algebra::powerset(1), Algebra::powerset(5),
                           Algebra::powerset(16), Algebra::finite_cofinite()}) {
    const Verdict v = check_boolean_axioms(a, 200, rng);
    EXPECT_TRUE(v.pass) << a.describe();
    EXPECT_TRUE(check_evaluate_oracle(a, 100, rng).pass) << a.describe();
  }
}

TEST(Algebra, TextRoundTrip) {
  Rng rng(9);
  for (const Algebra& a : {Algebra::powerset(4), Algebra::finite_cofinite(),
                           Algebra::free_product(Algebra::powerset(2),
                                                 Algebra::finite_cofinite())}) {
    for (int i = 0; i < 100; ++i) {
      const Elem x = random_elem(a, rng);
      EXPECT_EQ(evaluate(a, format_elem(a, x)), x) << format_elem(a, x);
    }
  }
  EXPECT_EQ(parse_algebra("P2*P3").describe(), "(P2*P3)");
  EXPECT_THROW(parse_algebra("Q3"), ParseError);
  EXPECT_THROW(evaluate(Algebra::powerset(2), "{1,3}"), AlgebraError);
  EXPECT_THROW(evaluate(Algebra::powerset(2), "{1"), ParseError);
}

TEST(Homomorphism, IdentityPasses) {
  const Algebra p2 = Algebra::powerset(2);
  Rng rng(1);
  EXPECT_TRUE(check_homomorphism(HomSpec::identity(p2), true, 0, rng).pass);
}

TEST(Homomorphism, ConstantOneFailsDisjointSum) {
  const Algebra p2 = Algebra::powerset(2);
  Rng rng(1);
  const HomCheck c = check_homomorphism(broken_homomorphism(p2), true, 0, rng);
  ASSERT_FALSE(c.pass);
  ASSERT_TRUE(c.violated.has_value());
  EXPECT_EQ(*c.violated, HomAxiom::disjoint_sum);
  // h(x ⊕ x) = h(0) = 1 while h(x) ⊕ h(x) = 0.
  EXPECT_EQ(*c.x, *c.y);
}

TEST(Homomorphism, AtomMapIntoPointExhaustive) {
  const Algebra p2 = Algebra::powerset(2), p1 = Algebra::powerset(1);
  const HomSpec h = HomSpec::from_atom_map(p2, p1, {0});
  Rng rng(1);
  const HomCheck c = check_homomorphism(h, true, 0, rng);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.pairs_checked, 16u);
  EXPECT_EQ(all_elements(p2).size(), 4u);
  EXPECT_EQ(h.apply(evaluate(p2, "{2}")), p1.zero());
  EXPECT_EQ(h.apply(evaluate(p2, "{1}")), p1.one());
}

TEST(Homomorphism, SampledMapsOnEveryBackend) {
  Rng rng(21);
  for (const Algebra& a : {Algebra::powerset(2), Algebra::powerset(6),
                           Algebra::finite_cofinite()})
    EXPECT_TRUE(check_homomorphism_samples(a, 100, rng).pass) << a.describe();
}
