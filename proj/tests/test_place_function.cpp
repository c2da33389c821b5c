#include <gtest/gtest.h>

#include <algorithm>

#include "balg/checks.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/place_function.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

struct P3 : ::testing::Test {
  Algebra a = Algebra::powerset(3);
  PlaceSpace c{a};
  Elem set(const char* text) { return evaluate(a, text); }
  PlaceFunction pf(const char* text) { return parse_place_function(c, text); }
  std::vector<Rational> vals(const PlaceFunction& f) { return oracle::values(f, 3); }
};

std::vector<Rational> q(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_F(P3, Chi) {
  const PlaceFunction f = c.chi(set("{1,2}"));
  ASSERT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.terms()[0].coeff, 1);
  EXPECT_EQ(f.terms()[0].support, set("{1,2}"));
  EXPECT_TRUE(c.chi(a.zero()).is_zero());
  EXPECT_EQ(c.chi(a.one()), c.unit());
  EXPECT_EQ(vals(c.unit()), q({1, 1, 1}));
}

TEST_F(P3, Canonicalize) {
  const std::vector<Term> cancel{{2, set("{1}")}, {-2, set("{1}")}};
  EXPECT_TRUE(c.canonicalize(cancel).is_zero());
  const std::vector<Term> overlap{{2, set("{1,2}")}, {3, set("{2,3}")}};
  const std::vector<Term> want{{2, set("{1}")}, {5, set("{2}")}, {3, set("{3}")}};
  EXPECT_EQ(c.canonicalize(overlap).terms(), want);
}

TEST_F(P3, AdditionExamples) {
  const PlaceFunction f = pf("2*chi({1,2})"), g = pf("3*chi({2,3})");
  const std::vector<Term> want{{2, set("{1}")}, {5, set("{2}")}, {3, set("{3}")}};
  EXPECT_EQ(c.add_formula(f, g).terms(), want);
  EXPECT_EQ(c.add_refine(f, g).terms(), want);
  EXPECT_EQ(vals(c.add(f, g)), q({2, 5, 3}));
  EXPECT_EQ(c.add_refine(c.zero(), g), g);
  EXPECT_EQ(c.add_formula(c.zero(), g), g);
}

TEST(PlaceFunction, CofiniteHalvesSumToUnit) {
  const Algebra fc = Algebra::finite_cofinite();
  const PlaceSpace c(fc);
  const PlaceFunction f = c.chi(evaluate(fc, "cof{0}")), g = c.chi(evaluate(fc, "fin{0}"));
  EXPECT_EQ(c.add_formula(f, g), c.unit());
  EXPECT_EQ(c.add_refine(f, g), c.unit());
}

TEST_F(P3, Scale) {
  const PlaceFunction f = pf("2*chi({1}) - 1/2*chi({2,3})");
  EXPECT_TRUE(c.scale(0, f).is_zero());
  EXPECT_EQ(c.scale(1, f), f);
  const std::vector<Term> want{{-2, set("{1}")}};
  EXPECT_EQ(c.scale(-1, pf("2*chi({1})")).terms(), want);
}

TEST_F(P3, LatticeExamples) {
  const PlaceFunction f = pf("2*chi({1,2})"), g = pf("3*chi({2,3})");
  EXPECT_EQ(c.meet(f, g).terms(), (std::vector<Term>{{2, set("{2}")}}));
  EXPECT_EQ(c.join(f, g).terms(), (std::vector<Term>{{2, set("{1}")}, {3, set("{2,3}")}}));
}

TEST_F(P3, Components) {
  EXPECT_TRUE(c.is_component(c.chi(set("{2}"))));
  EXPECT_FALSE(c.is_component(pf("2*chi({2})")));
  Rng rng(2);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(c.is_component(c.chi(random_elem(a, rng))));
}

TEST_F(P3, Regularity) {
  const std::vector<Elem> xs{set("{1}"), set("{2}")};
  EXPECT_TRUE(check_regularity(c, xs, set("{1,2}")).pass);
  const std::vector<Elem> one{set("{3}")};
  EXPECT_TRUE(check_regularity(c, one, set("{3}")).pass);
  EXPECT_FALSE(check_regularity(c, xs, a.one()).pass);

  const Algebra fc = Algebra::finite_cofinite();
  const PlaceSpace cf(fc);
  const std::vector<Elem> fs{evaluate(fc, "fin{0}"), evaluate(fc, "fin{1}")};
  EXPECT_TRUE(check_regularity(cf, fs, evaluate(fc, "fin{0,1}")).pass);
}

TEST(PlaceFunction, OperationsMatchPointValues) {
  Rng rng(17);
  for (const Algebra& a : {Algebra::powerset(5), Algebra::finite_cofinite()}) {
    const PlaceSpace c(a);
    const std::uint64_t points = a.kind() == AlgebraKind::powerset ? 5 : 2 * kSampleIndexRange;
    for (int i = 0; i < 300; ++i) {
      const PlaceFunction f = c.random(rng), g = c.random(rng);
      const Rational k = random_rational(rng);
      const PlaceFunction sum = c.add(f, g), lo = c.meet(f, g), hi = c.join(f, g),
                          ab = c.abs(f), sc = c.scale(k, f);
      ASSERT_EQ(c.add_refine(f, g), sum);
      ASSERT_TRUE(c.add(f, c.scale(-1, f)).is_zero());
      ASSERT_EQ(c.abs(c.scale(-1, f)), ab);
      for (std::uint64_t p = 0; p < points; ++p) {
        const Rational x = oracle::value(f, p), y = oracle::value(g, p);
        ASSERT_EQ(oracle::value(sum, p), x + y);
        ASSERT_EQ(oracle::value(lo, p), std::min(x, y));
        ASSERT_EQ(oracle::value(hi, p), std::max(x, y));
        ASSERT_EQ(oracle::value(ab, p), x < 0 ? Rational(-x) : x);
        ASSERT_EQ(oracle::value(sc, p), k * x);
      }
    }
  }
}

TEST(PlaceFunction, SpaceLevelChecks) {
  Rng rng(23);
  for (const Algebra& a : {Algebra::powerset(3), Algebra::powerset(8), Algebra::finite_cofinite()}) {
    const PlaceSpace c(a);
    EXPECT_TRUE(check_addition_oracle(c, 200, rng).pass) << a.describe();
    EXPECT_TRUE(check_riesz_axioms(c, 100, rng).pass) << a.describe();
    EXPECT_TRUE(check_chi_isomorphism(c, 50, rng).pass) << a.describe();
    EXPECT_TRUE(check_regularity_samples(c, 10, rng).pass) << a.describe();
  }
}

TEST(PlaceFunction, TextRoundTrip) {
  const Algebra a = Algebra::powerset(4);
  const PlaceSpace c(a);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const PlaceFunction f = c.random(rng);
    EXPECT_EQ(parse_place_function(c, format_place_function(c, f)), f);
  }
  EXPECT_THROW(parse_place_function(c, "2*chi({1}"), ParseError);
}
