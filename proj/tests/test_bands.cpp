#include <gtest/gtest.h>

#include "balg/bands.hpp"
#include "balg/checks.hpp"
#include "balg/errors.hpp"

using namespace balg;

namespace {

AtomVector vec(std::initializer_list<int> xs) {
  AtomVector v;
  for (int x : xs) v.values.emplace_back(x);
  return v;
}

}  // namespace

TEST(Bands, PrincipalBand) {
  EXPECT_EQ(principal_band(vec({2, 0, 3})).members, 0b101u);
  EXPECT_EQ(principal_band(vec({0, 0, 0})).members, 0u);
  EXPECT_EQ(principal_band(vec({1, 1, 1})).members, 0b111u);
  EXPECT_TRUE(principal_band(vec({2, 0, 3})).contains(vec({-1, 0, 7})));
  EXPECT_FALSE(principal_band(vec({2, 0, 3})).contains(vec({0, 1, 0})));
}

TEST(Bands, Disjointness) {
  EXPECT_TRUE(bands_disjoint(vec({1, 0, 0}), vec({0, 0, 5})));
  EXPECT_FALSE(bands_disjoint(vec({1, 1, 0}), vec({0, 1, 0})));
  Rng rng(4);
  const AtomSpace e(6);
  for (int i = 0; i < 500; ++i) {
    const auto [f, g] = e.random_disjoint_pair(rng);
    ASSERT_TRUE(e.is_zero(e.meet(e.abs(f), e.abs(g))));
    ASSERT_TRUE(bands_disjoint(f, g));
    ASSERT_EQ(principal_band(f).members & principal_band(g).members, 0u);
  }
}

TEST(Bands, Counts) {
  EXPECT_EQ(all_bands(3).size(), 8u);
  EXPECT_EQ(all_bands(1).size(), 2u);
  EXPECT_EQ(all_bands(10).size(), 1024u);
  EXPECT_EQ(band_algebra(3).atom_count(), 3);
  EXPECT_THROW(band_algebra(0), AlgebraError);
}

TEST(Bands, LatticeMatchesAlgebra) {
  const Algebra b = band_algebra(4);
  for (const Band& x : all_bands(4)) {
    EXPECT_EQ(elem_band(band_elem(b, x)), x);
    for (const Band& y : all_bands(4)) {
      EXPECT_EQ(elem_band(b.meet(band_elem(b, x), band_elem(b, y))), x.meet(y));
      EXPECT_EQ(elem_band(b.join(band_elem(b, x), band_elem(b, y))), x.join(y));
    }
    EXPECT_EQ(elem_band(b.complement(band_elem(b, x))), x.complement());
  }
}

TEST(Bands, ProductComparison) {
  Rng rng(5);
  const Verdict six = compare_band_products(2, 3, 50, rng);
  EXPECT_TRUE(six.pass);
  std::size_t bijection_entries = 0;
  for (const Witness& w : six.witnesses)
    if (w.label == "atom bijection") bijection_entries += w.fields.size();
  EXPECT_EQ(bijection_entries, 6u);
  EXPECT_TRUE(compare_band_products(1, 5, 20, rng).pass);
  EXPECT_TRUE(compare_band_products(4, 4, 20, rng).pass);
}

TEST(Bands, SuiteChecks) {
  Rng rng(6);
  for (std::size_t n : {1u, 3u, 6u, 10u}) EXPECT_TRUE(check_bands(n, 100, rng).pass) << n;
}
