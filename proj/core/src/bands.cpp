#include "balg/bands.hpp"

#include <algorithm>
#include <set>

#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "balg/homomorphism.hpp"

namespace balg {
namespace {

std::uint32_t full_mask(std::size_t dim) {
  return dim >= 32 ? ~0u : (1u << dim) - 1;
}

void require_dim(std::size_t dim) {
  if (dim > kMaxBandDim)
    throw AlgebraError("band dimension " + std::to_string(dim) + " exceeds " +
                       std::to_string(kMaxBandDim));
}

}  // namespace

bool Band::contains(const AtomVector& v) const {
  if (v.dim() != dim) return false;
  for (std::size_t i = 0; i < dim; ++i)
    if (v.values[i] != 0 && !(members & (1u << i))) return false;
  return true;
}

Band Band::meet(const Band& other) const { return {dim, members & other.members}; }
Band Band::join(const Band& other) const { return {dim, members | other.members}; }
Band Band::complement() const { return {dim, ~members & full_mask(dim)}; }

Band principal_band(const AtomVector& f) {
  require_dim(f.dim());
  Band b{f.dim(), 0};
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (f.values[i] != 0) b.members |= 1u << i;
  return b;
}

bool bands_disjoint(const AtomVector& f, const AtomVector& g) {
  if (f.dim() != g.dim()) throw AlgebraError("bands of different spaces");
  const AtomSpace space(f.dim());
  const Band bf = principal_band(f);
  const Band bg = principal_band(g);
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (!(bf.members & (1u << i))) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!(bg.members & (1u << j))) continue;
      const AtomVector m = space.meet(space.basis(i), space.basis(j));
      if (!space.is_zero(m)) return false;
    }
  }
  return true;
}

std::vector<Band> all_bands(std::size_t dim) {
  require_dim(dim);
  std::vector<Band> out;
  out.reserve(std::size_t{1} << dim);
  for (std::uint32_t bits = 0; bits <= full_mask(dim); ++bits) {
    out.push_back(Band{dim, bits});
    if (bits == full_mask(dim)) break;
  }
  return out;
}

Algebra band_algebra(std::size_t n) {
  if (n < 1 || n > kMaxBandDim)
    throw AlgebraError("band algebra needs 1 <= n <= 16, got " + std::to_string(n));
  return Algebra::powerset(static_cast<int>(n), "B(Q^" + std::to_string(n) + ")");
}

Elem band_elem(const Algebra& band_alg, const Band& b) {
  if (static_cast<std::size_t>(band_alg.atom_count()) != b.dim)
    throw AlgebraError("band dimension does not match the band algebra");
  return AtomSet{static_cast<std::uint8_t>(b.dim), b.members};
}

Band elem_band(const Elem& x) {
  const AtomSet* s = x.atom_set();
  if (!s) throw AlgebraError("band elements live in a powerset algebra");
  return Band{s->width, s->bits};
}

Verdict compare_band_products(std::size_t n, std::size_t m, std::size_t trials,
                              Rng& rng) {
  if (n < 1 || m < 1 || n * m > kMaxBandDim)
    throw AlgebraError("compare_band_products needs n, m >= 1 and n*m <= 16");
  Verdict v;
  const Algebra be = band_algebra(n);
  const Algebra bf = band_algebra(m);
  const Algebra product = Algebra::free_product(be, bf);
  const Algebra tensor = band_algebra(n * m);

  const auto left_atoms = be.atoms();
  const auto right_atoms = bf.atoms();
  const auto product_atoms = product.atoms();
  ++v.checks;
  if (product_atoms.size() != n * m) {
    v.fail({"atom counts differ",
            {{"free_product", std::to_string(product_atoms.size())},
             {"tensor", std::to_string(n * m)}}});
    return v;
  }

  Witness bijection{"atom bijection", {}};
  std::set<std::uint32_t> images;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      const Elem atom = rectangle(product, left_atoms[p], right_atoms[q]);
      ++v.checks;
      if (std::find(product_atoms.begin(), product_atoms.end(), atom) ==
          product_atoms.end()) {
        v.fail({"rectangle of atoms is not an atom",
                {{"rect", format_elem(product, atom)}}});
        return v;
      }
      const Elem image = AtomSet{static_cast<std::uint8_t>(n * m), 1u << (p * m + q)};
      images.insert(image.atom_set()->bits);
      bijection.fields.emplace_back(format_elem(product, atom),
                                    format_elem(tensor, image));
    }
  }
  ++v.checks;
  if (images.size() != n * m) {
    v.fail({"atom map is not injective", {}});
    return v;
  }

  // x ↦ the atom pairs below x, and back by joining rectangles.
  auto forward = [&](const Elem& x) -> Elem {
    AtomSet out{static_cast<std::uint8_t>(n * m), 0};
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < m; ++q)
        if (product.leq(rectangle(product, left_atoms[p], right_atoms[q]), x))
          out.bits |= 1u << (p * m + q);
    return out;
  };
  auto backward = [&](const Elem& y) -> Elem {
    std::vector<Rectangle> rects;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < m; ++q)
        if (y.atom_set()->bits & (1u << (p * m + q)))
          rects.push_back({left_atoms[p], right_atoms[q]});
    return normalize(product, rects);
  };

  const HomCheck hom =
      check_homomorphism(HomSpec::from_rule(product, tensor, forward), false, trials, rng);
  v.checks += hom.pairs_checked;
  if (!hom.pass) {
    Witness w{"induced map is not a homomorphism",
              {{"axiom", to_string(*hom.violated)}}};
    if (hom.x) w.fields.emplace_back("x", format_elem(product, *hom.x));
    if (hom.y) w.fields.emplace_back("y", format_elem(product, *hom.y));
    v.fail(std::move(w));
    return v;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const Elem x = random_elem(product, rng);
    const Elem y = random_elem(tensor, rng);
    ++v.checks;
    if (!(backward(forward(x)) == x) || !(forward(backward(y)) == y)) {
      v.fail({"atom bijection does not invert",
              {{"x", format_elem(product, x)}, {"y", format_elem(tensor, y)}}});
      return v;
    }
  }

  v.note(std::move(bijection));
  v.note({"isomorphic in finite dimension",
          {{"atoms", std::to_string(n * m)},
           {"infinite_dimension", "non-isomorphism carried by the no_supremum certificates"}}});
  return v;
}

}  // namespace balg
