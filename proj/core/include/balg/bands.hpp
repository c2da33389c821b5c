#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/atom_model.hpp"
#include "balg/verdict.hpp"

namespace balg {

/// A band of Q^dim: the vectors supported inside `members`. Bit i is atom i.
struct Band {
  std::size_t dim = 0;
  std::uint32_t members = 0;

  bool contains(const AtomVector& v) const;
  Band meet(const Band& other) const;
  Band join(const Band& other) const;
  Band complement() const;
  bool leq(const Band& other) const { return (members & ~other.members) == 0; }

  friend bool operator==(const Band&, const Band&) = default;
};

inline constexpr std::size_t kMaxBandDim = 16;

/// [f]: the coordinates where f is nonzero.
Band principal_band(const AtomVector& f);

/// Whether every basis vector of [f] is disjoint from every basis vector
/// of [g].
bool bands_disjoint(const AtomVector& f, const AtomVector& g);

/// All 2^dim bands, in the order of their member bits.
std::vector<Band> all_bands(std::size_t dim);

/// B(E) for E = Q^n, as the powerset algebra on n atoms.
Algebra band_algebra(std::size_t n);
Elem band_elem(const Algebra& band_alg, const Band& b);
Band elem_band(const Elem& x);

/// B(E)⊗B(F) against B(E⊗F) = P(n·m): the atom bijection
/// rect({p},{q}) ↦ {p·m+q} and a homomorphism check of the induced map on
/// `trials` random elements together with its inverse.
Verdict compare_band_products(std::size_t n, std::size_t m, std::size_t trials,
                              Rng& rng);

}  // namespace balg
