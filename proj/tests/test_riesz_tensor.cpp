#include <gtest/gtest.h>

#include "balg/atom_model.hpp"
#include "balg/checks.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

AtomVector vec(std::initializer_list<int> xs) {
  AtomVector v;
  for (int x : xs) v.values.emplace_back(x);
  return v;
}

// P({1,2}) ⊗ P({a,b}) with a = {1}, b = {2} on the right.
struct Square : ::testing::Test {
  Algebra a = Algebra::powerset(2);
  Algebra ab = Algebra::free_product(a, a);
  PsiMap psi{a, a};
  TensorMap t = build_T(a, a);
  Elem set(const char* text) { return evaluate(a, text); }
  PlaceFunction pf(const char* text) { return parse_place_function(psi.left(), text); }
  PlaceFunction rect_chi(Rational c, const char* l, const char* r) {
    return psi.product().scale(c, psi.product().chi(rectangle(ab, set(l), set(r))));
  }
};

}  // namespace

TEST(AtomModel, Coordinates) {
  const PlaceSpace c(Algebra::powerset(3));
  EXPECT_EQ(to_atom_model(c, parse_place_function(c, "2*chi({1,2})")), vec({2, 2, 0}));
  EXPECT_EQ(to_atom_model(c, c.zero()), vec({0, 0, 0}));
  EXPECT_EQ(to_atom_model(c, c.unit()), vec({1, 1, 1}));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const PlaceFunction f = c.random(rng);
    EXPECT_EQ(from_atom_model(c, to_atom_model(c, f)), f);
  }
}

TEST(AtomModel, PureTensor) {
  EXPECT_EQ(pure_tensor(vec({1, 0}), vec({0, 1})), vec({0, 1, 0, 0}));
  EXPECT_EQ(pure_tensor(vec({1, 1}), vec({1, 1})), vec({1, 1, 1, 1}));
  EXPECT_EQ(pure_tensor(vec({2, 3}), vec({5, 7})), vec({10, 14, 15, 21}));
}

TEST_F(Square, PsiValues) {
  EXPECT_EQ(psi(psi.left().chi(set("{1}")), psi.right().chi(set("{1}"))),
            rect_chi(1, "{1}", "{1}"));
  EXPECT_EQ(psi(psi.left().unit(), psi.right().unit()), psi.product().unit());
  const PlaceFunction six = psi(pf("2*chi({1})"), pf("3*chi({1})"));
  ASSERT_EQ(six.terms().size(), 1u);
  EXPECT_EQ(six.terms()[0].coeff, 6);
  EXPECT_EQ(six.terms()[0].support, rectangle(ab, set("{1}"), set("{1}")));
}

TEST_F(Square, PsiIsBimorphismAndBrokenMapIsNot) {
  Rng rng(5);
  EXPECT_TRUE(check_psi(psi, 200, rng).pass);
  const auto broken = [&](const PlaceFunction& f, const PlaceFunction& g) {
    return broken_bimorphism(psi, f, g);
  };
  const Verdict v = verify_bimorphism(broken, psi.left(), psi.right(), psi.product(), 50, rng);
  ASSERT_FALSE(v.pass);
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_FALSE(v.witnesses[0].fields.empty());
}

TEST_F(Square, PsiAgreesWithPointProducts) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const PlaceFunction f = psi.left().random(rng), g = psi.right().random(rng);
    const PlaceFunction h = psi(f, g);
    for (std::uint64_t p = 0; p < 2; ++p)
      for (std::uint64_t q = 0; q < 2; ++q)
        ASSERT_EQ(oracle::value(h, p, q), oracle::value(f, p) * oracle::value(g, q));
  }
}

TEST_F(Square, TensorMapValues) {
  EXPECT_EQ(t.apply(t.source().basis(0)), rect_chi(1, "{1}", "{1}"));
  EXPECT_EQ(t.apply(t.source().ones()), psi.product().unit());
  EXPECT_EQ(t.apply(pure_tensor(vec({1, 0}), vec({0, 1}))), rect_chi(1, "{1}", "{2}"));
}

TEST_F(Square, OntoPreimages) {
  const PlaceFunction h = psi.product().chi(ab.complement(rectangle(ab, set("{1}"), set("{1}"))));
  const auto pre = onto_preimage(t, h);
  EXPECT_EQ(pre.size(), 2u);
  PlaceFunction back;
  for (const PureTensorTerm& term : pre)
    back = psi.product().add(back, psi.product().scale(term.coeff, psi(psi.left().chi(term.left),
                                                                       psi.right().chi(term.right))));
  EXPECT_EQ(back, h);
  EXPECT_EQ(t.coordinates(psi.product().unit()), vec({1, 1, 1, 1}));
  const auto unit_pre = onto_preimage(t, psi.product().unit());
  ASSERT_EQ(unit_pre.size(), 1u);
  EXPECT_EQ(unit_pre[0].left, a.one());
  EXPECT_EQ(unit_pre[0].right, a.one());
}

TEST(TensorMap, ValuesMatchCoordinates) {
  Rng rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const TensorMap t = build_T(Algebra::powerset(n), Algebra::powerset(m));
      EXPECT_EQ(rational_rank(t.matrix()), static_cast<std::size_t>(n * m));
      for (int i = 0; i < 20; ++i) {
        const AtomVector v = t.source().random(rng);
        const PlaceFunction h = t.apply(v);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < m; ++q) ASSERT_EQ(oracle::value(h, p, q), v.values[p * m + q]);
      }
    }
  }
  EXPECT_EQ(rational_rank(build_T(Algebra::powerset(3), Algebra::powerset(4)).matrix()), 12u);
}

TEST(TensorMap, RankOfDeficientMatrix) {
  LinearLatticeMap m{2, 2, {1, 2, 2, 4}};
  EXPECT_EQ(rational_rank(m), 1u);
  EXPECT_EQ(rational_rank(LinearLatticeMap::identity(5)), 5u);
}

TEST(TensorMap, FullChecks) {
  Rng rng(8);
  const TensorMap t = build_T(Algebra::powerset(2), Algebra::powerset(3));
  EXPECT_TRUE(check_tensor_map(t, 50, rng).pass);
  EXPECT_TRUE(check_universal_property_models(t, 20, rng).pass);
}

TEST(UniversalProperty, InducedMaps) {
  Rng rng(9);
  const TensorMap t = build_T(Algebra::powerset(2), Algebra::powerset(2));
  const AtomBimorphism tensor = [](const AtomVector& e, const AtomVector& f) {
    return pure_tensor(e, f);
  };
  const auto id = verify_universal_property(tensor, 2, 2, 4, 20, rng);
  EXPECT_TRUE(id.verdict.pass);
  EXPECT_EQ(id.induced, LinearLatticeMap::identity(4));

  const AtomBimorphism swapped = [](const AtomVector& e, const AtomVector& f) {
    AtomVector v = pure_tensor(e, f);
    std::swap(v.values[1], v.values[2]);
    return v;
  };
  const auto perm = verify_universal_property(swapped, 2, 2, 4, 20, rng);
  EXPECT_TRUE(perm.verdict.pass);
  LinearLatticeMap want = LinearLatticeMap::identity(4);
  want.at(1, 1) = want.at(2, 2) = 0;
  want.at(1, 2) = want.at(2, 1) = 1;
  EXPECT_EQ(perm.induced, want);
}

TEST(Psi, CofinitePairs) {
  Rng rng(10);
  const Algebra fc = Algebra::finite_cofinite();
  const PsiMap psi(fc, fc);
  EXPECT_TRUE(check_psi(psi, 100, rng).pass);
  for (int i = 0; i < 100; ++i) {
    const PlaceFunction f = psi.left().random(rng), g = psi.right().random(rng);
    const PlaceFunction h = psi(f, g);
    for (std::uint64_t p = 0; p < 12; ++p)
      for (std::uint64_t q = 0; q < 12; ++q)
        ASSERT_EQ(oracle::value(h, p, q), oracle::value(f, p) * oracle::value(g, q));
  }
}
