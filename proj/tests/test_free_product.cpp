#include <gtest/gtest.h>

#include <set>

#include "balg/checks.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "oracles.hpp"

using namespace balg;

namespace {

// P({1,2}) ⊗ P({a,b}); pair bit p·2 + q with a = 0, b = 1.
struct Square : ::testing::Test {
  Algebra a = Algebra::powerset(2);
  Algebra b = Algebra::powerset(2);
  Algebra ab = Algebra::free_product(a, b);
  Elem set(const Algebra& side, const char* text) { return evaluate(side, text); }
  std::uint64_t mask(const Elem& x) { return oracle::pair_mask(x, 2, 2); }
};

constexpr std::uint64_t bit(int p, int q) { return std::uint64_t{1} << (p * 2 + q); }

}  // namespace

TEST_F(Square, EmbedLeft) {
  EXPECT_EQ(mask(embed_left(ab, set(a, "{1}"))), bit(0, 0) | bit(0, 1));
  EXPECT_EQ(embed_left(ab, a.zero()), ab.zero());
  EXPECT_EQ(embed_left(ab, a.one()), ab.one());
}

TEST_F(Square, NormalizeMergesRectangles) {
  const std::vector<Rectangle> rects{{set(a, "{1,2}"), set(b, "{1}")},
                                     {set(a, "{2}"), set(b, "{1,2}")}};
  const Elem x = normalize(ab, rects);
  EXPECT_EQ(mask(x), bit(0, 0) | bit(1, 0) | bit(1, 1));
  const RectForm& g = *x.rect_form();
  EXPECT_EQ(g.left_cells, (std::vector<Elem>{set(a, "{1}"), set(a, "{2}")}));
  EXPECT_EQ(g.right_cells, (std::vector<Elem>{set(b, "{1}"), set(b, "{2}")}));
  EXPECT_EQ(normalize(ab, std::span<const Rectangle>{}), ab.zero());
  const std::vector<Rectangle> full{{a.one(), b.one()}};
  EXPECT_EQ(normalize(ab, full), ab.one());
}

TEST_F(Square, ComplementOfRectangle) {
  const Elem r = rectangle(ab, set(a, "{1}"), set(b, "{1}"));
  const Elem c = ab.complement(r);
  EXPECT_EQ(mask(c), bit(0, 1) | bit(1, 0) | bit(1, 1));
  const std::vector<Rectangle> want{{set(a, "{1}"), set(b, "{2}")},
                                    {set(a, "{2}"), set(b, "{1,2}")}};
  EXPECT_EQ(decompose_disjoint(ab, c), want);
  EXPECT_EQ(decompose_disjoint(ab, r), (std::vector<Rectangle>{{set(a, "{1}"), set(b, "{1}")}}));
  EXPECT_TRUE(decompose_disjoint(ab, ab.zero()).empty());

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Elem x = random_elem(ab, rng);
    EXPECT_TRUE(ab.is_zero(ab.meet(x, ab.complement(x))));
  }
}

TEST_F(Square, InducedHomFromIdentityAndCollapse) {
  const Algebra point = Algebra::powerset(1);
  const Algebra prod = Algebra::free_product(a, point);
  const HomSpec id = HomSpec::identity(a);
  const HomSpec collapse = HomSpec::from_atom_map(point, a, {0, 0});
  for (const Elem& x : all_elements(a))
    EXPECT_EQ(induced_hom(id, collapse, prod, embed_left(prod, x)), x);
  EXPECT_EQ(induced_hom(id, collapse, prod, prod.one()), a.one());
  EXPECT_EQ(induced_hom(id, collapse, prod, prod.zero()), a.zero());
}

TEST(FreeProduct, Triviality) {
  const Algebra t = Algebra::trivial(), p1 = Algebra::powerset(1),
                fc = Algebra::finite_cofinite();
  EXPECT_TRUE(fp_is_trivial(t, p1));
  EXPECT_FALSE(fp_is_trivial(p1, p1));
  EXPECT_TRUE(fp_is_trivial(fc, t));
}

TEST(FreeProduct, RectanglesOfNonzeroFactorsAreNonzero) {
  const Algebra fc = Algebra::finite_cofinite();
  const Algebra ff = Algebra::free_product(fc, fc);
  const Elem r = rectangle(ff, evaluate(fc, "fin{0}"), evaluate(fc, "fin{0}"));
  EXPECT_FALSE(ff.is_zero(r));
  EXPECT_TRUE(oracle::member(r, 0, 0));
  EXPECT_FALSE(oracle::member(r, 0, 1));
}

TEST(FreeProduct, OperationsMatchAtomPairs) {
  Rng rng(8);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const Algebra ab = Algebra::free_product(Algebra::powerset(n), Algebra::powerset(m));
      for (int i = 0; i < 60; ++i) {
        const Elem x = random_elem(ab, rng), y = random_elem(ab, rng);
        const std::uint64_t mx = oracle::pair_mask(x, n, m), my = oracle::pair_mask(y, n, m);
        const std::uint64_t full = (std::uint64_t{1} << (n * m)) - 1;
        ASSERT_EQ(oracle::pair_mask(ab.meet(x, y), n, m), mx & my);
        ASSERT_EQ(oracle::pair_mask(ab.join(x, y), n, m), mx | my);
        ASSERT_EQ(oracle::pair_mask(ab.disjoint_sum(x, y), n, m), mx ^ my);
        ASSERT_EQ(oracle::pair_mask(ab.complement(x), n, m), full & ~mx);
        ASSERT_EQ(ab.leq(x, y), (mx & ~my) == 0);

        std::uint64_t seen = 0;
        for (const Rectangle& r : decompose_disjoint(ab, x)) {
          const std::uint64_t piece = oracle::pair_mask(rectangle(ab, r.left, r.right), n, m);
          ASSERT_NE(piece, 0u);
          ASSERT_EQ(piece & seen, 0u);
          seen |= piece;
        }
        ASSERT_EQ(seen, mx);
      }
    }
  }
}

TEST(FreeProduct, ElementCountsByEnumeration) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; n * m <= 12; ++m) {
      const Algebra A = Algebra::powerset(n), B = Algebra::powerset(m);
      const Algebra ab = Algebra::free_product(A, B);
      EXPECT_EQ(ab.atoms().size(), static_cast<std::size_t>(n * m));
      std::set<std::uint64_t> masks;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n * m)); ++s) {
        std::vector<Rectangle> rects;
        for (int k = 0; k < n * m; ++k)
          if ((s >> k) & 1)
            rects.push_back({A.atoms()[k / m], B.atoms()[k % m]});
        const Elem x = normalize(ab, rects);
        ASSERT_EQ(oracle::pair_mask(x, n, m), s);
        masks.insert(s);
      }
      EXPECT_EQ(masks.size(), std::size_t{1} << (n * m));
      EXPECT_TRUE(check_product_counts(n, m).pass);
    }
  }
}

TEST(FreeProduct, StructuralChecks) {
  Rng rng(12);
  const Algebra fc = Algebra::finite_cofinite();
  for (const Algebra& ab :
       {Algebra::free_product(Algebra::powerset(2), Algebra::powerset(3)),
        Algebra::free_product(fc, Algebra::powerset(2)), Algebra::free_product(fc, fc)}) {
    EXPECT_TRUE(check_free_product(ab, 100, rng).pass) << ab.describe();
    EXPECT_TRUE(check_induced_universal(ab, 50, rng).pass) << ab.describe();
  }
}
