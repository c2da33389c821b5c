#include "balg/random.hpp"

#include "balg/free_product.hpp"

namespace balg {

Elem random_elem(const Algebra& a, Rng& rng) {
  switch (a.kind()) {
    case AlgebraKind::powerset: {
      if (a.is_trivial()) return a.zero();
      const int n = a.atom_count();
      std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1u);
      return AtomSet{static_cast<std::uint8_t>(n), bits(rng)};
    }
    case AlgebraKind::finite_cofinite: {
      std::bernoulli_distribution coin(0.5);
      std::bernoulli_distribution member(0.3);
      IndexSet s{coin(rng), {}};
      for (std::uint64_t i = 0; i < kSampleIndexRange; ++i)
        if (member(rng)) s.support.push_back(i);
      return s;
    }
    case AlgebraKind::free_product: {
      if (a.is_trivial()) return a.zero();
      std::uniform_int_distribution<int> count(0, 3);
      std::vector<Rectangle> rects;
      const int k = count(rng);
      for (int i = 0; i < k; ++i)
        rects.push_back({random_elem(a.left(), rng), random_elem(a.right(), rng)});
      Elem x = normalize(a, rects);
      std::bernoulli_distribution flip(0.25);
      return flip(rng) ? a.complement(x) : x;
    }
  }
  return {};
}

Elem random_nonzero_elem(const Algebra& a, Rng& rng) {
  if (a.is_trivial()) return a.one();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Elem x = random_elem(a, rng);
    if (!a.is_zero(x)) return x;
  }
  return a.one();
}

Elem random_join_of(const Algebra& a, std::span<const Elem> cells, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  Elem acc = a.zero();
  for (const Elem& c : cells)
    if (coin(rng)) acc = a.join(acc, c);
  return acc;
}

Rational random_rational(Rng& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rational(p, den(rng));
}

Rational random_positive_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace balg
