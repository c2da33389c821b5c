#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/free_product.hpp"
#include "balg/place_function.hpp"
#include "balg/random.hpp"
#include "balg/rational.hpp"
#include "balg/verdict.hpp"

namespace balg {

/// A vector of the coordinate Riesz space Q^n: lattice operations and the
/// positive cone are coordinatewise. Pair spaces index (p, q) as p·m + q.
struct AtomVector {
  std::vector<Rational> values;

  std::size_t dim() const { return values.size(); }
  friend bool operator==(const AtomVector&, const AtomVector&) = default;
};

/// Q^n as a Riesz space, with the sampling hooks used by verify_bimorphism.
class AtomSpace {
 public:
  using value_type = AtomVector;

  explicit AtomSpace(std::size_t dim) : dim_(dim) {}
  std::size_t dim() const { return dim_; }

  AtomVector zero() const { return AtomVector{std::vector<Rational>(dim_)}; }
  AtomVector ones() const { return AtomVector{std::vector<Rational>(dim_, 1)}; }
  AtomVector basis(std::size_t i) const;

  AtomVector add(const AtomVector& a, const AtomVector& b) const;
  AtomVector sub(const AtomVector& a, const AtomVector& b) const;
  AtomVector scale(const Rational& c, const AtomVector& a) const;
  AtomVector meet(const AtomVector& a, const AtomVector& b) const;
  AtomVector join(const AtomVector& a, const AtomVector& b) const;
  AtomVector abs(const AtomVector& a) const;
  bool is_zero(const AtomVector& a) const;
  bool is_positive(const AtomVector& a) const;
  bool leq(const AtomVector& a, const AtomVector& b) const;

  AtomVector random(Rng& rng) const;
  AtomVector random_positive(Rng& rng) const;
  std::pair<AtomVector, AtomVector> random_disjoint_pair(Rng& rng) const;
  std::string format(const AtomVector& a) const;

 private:
  void check(const AtomVector& a) const;
  std::size_t dim_;
};

/// Coordinates of a place function over a finite powerset algebra at each
/// atom; the evaluation isomorphism C(A) ≅ Q^atoms.
AtomVector to_atom_model(const PlaceSpace& space, const PlaceFunction& f);
PlaceFunction from_atom_model(const PlaceSpace& space, const AtomVector& v);

/// e ⊗ f on atom pairs: (p, q) ↦ e(p)·f(q).
AtomVector pure_tensor(const AtomVector& e, const AtomVector& f);

/// ψ: C(A) × C(B) -> C(A⊗B), Σᵢⱼ λᵢγⱼ χ̂(ε_A(xᵢ) ∧ ε_B(uⱼ)).
class PsiMap {
 public:
  PsiMap(Algebra left, Algebra right);

  const PlaceSpace& left() const { return left_; }
  const PlaceSpace& right() const { return right_; }
  const PlaceSpace& product() const { return product_; }

  PlaceFunction operator()(const PlaceFunction& f, const PlaceFunction& g) const;
  /// The double-sum formula applied to arbitrary disjoint representations.
  PlaceFunction on_terms(std::span<const Term> f, std::span<const Term> g) const;

 private:
  PlaceSpace left_;
  PlaceSpace right_;
  PlaceSpace product_;
};

/// Linear map between coordinate spaces, row-major (target × source).
struct LinearLatticeMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;

  static LinearLatticeMap identity(std::size_t n);
  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  AtomVector apply(const AtomVector& v) const;
  /// Every source coordinate routed to at most one target coordinate with a
  /// nonnegative weight: the shape of a Riesz homomorphism between atom models.
  bool is_routed() const;

  friend bool operator==(const LinearLatticeMap&, const LinearLatticeMap&) = default;
};

/// Rank over Q by fraction-exact Gaussian elimination.
std::size_t rational_rank(const LinearLatticeMap& m);

/// T: Q^(atoms A × atoms B) -> C(A⊗B), indicator(p, q) ↦ χ̂(rect({p}, {q})),
/// extended linearly, for finite powerset A and B.
class TensorMap {
 public:
  TensorMap(Algebra left, Algebra right);

  const PsiMap& psi() const { return psi_; }
  std::size_t left_dim() const { return n_; }
  std::size_t right_dim() const { return m_; }
  const AtomSpace& source() const { return source_; }
  /// Atoms of A⊗B, the coordinate basis of C(A⊗B).
  const std::vector<Elem>& product_atoms() const { return product_atoms_; }
  /// T in coordinates: column (p, q) = coordinates of T(indicator(p, q)).
  const LinearLatticeMap& matrix() const { return matrix_; }

  PlaceFunction apply(const AtomVector& v) const;
  AtomVector coordinates(const PlaceFunction& h) const;
  /// The atom-model image of f ⊗ g for place functions f, g.
  AtomVector tensor_of(const PlaceFunction& f, const PlaceFunction& g) const;

 private:
  PsiMap psi_;
  std::size_t n_;
  std::size_t m_;
  AtomSpace source_;
  std::vector<Elem> product_atoms_;
  LinearLatticeMap matrix_;
};

TensorMap build_T(const Algebra& left, const Algebra& right);

/// Checks that `map` is a Riesz bimorphism on sampled inputs: additive in
/// each slot, scalars move freely between slots and out, positive on
/// positive pairs, and m(f₁,g) ∧ m(f₂,g) = 0 whenever f₁ ∧ f₂ = 0 and g ≥ 0
/// (and symmetrically). Stops at the first counterexample.
template <class L, class R, class H, class Map>
Verdict verify_bimorphism(const Map& map, const L& left, const R& right,
                          const H& target, std::size_t trials, Rng& rng) {
  Verdict v;
  auto counterexample = [&](const std::string& law,
                            std::vector<std::pair<std::string, std::string>> fields) {
    v.fail(Witness{law, std::move(fields)});
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const auto f1 = left.random(rng);
    const auto f2 = left.random(rng);
    const auto g1 = right.random(rng);
    const auto g2 = right.random(rng);
    const Rational c = random_rational(rng, true);

    ++v.checks;
    if (!(map(left.add(f1, f2), g1) == target.add(map(f1, g1), map(f2, g1)))) {
      counterexample("additive in the first slot",
                     {{"f1", left.format(f1)}, {"f2", left.format(f2)},
                      {"g", right.format(g1)}});
      return v;
    }
    ++v.checks;
    if (!(map(f1, right.add(g1, g2)) == target.add(map(f1, g1), map(f1, g2)))) {
      counterexample("additive in the second slot",
                     {{"f", left.format(f1)}, {"g1", right.format(g1)},
                      {"g2", right.format(g2)}});
      return v;
    }
    ++v.checks;
    const auto scaled = target.scale(c, map(f1, g1));
    if (!(map(left.scale(c, f1), g1) == scaled) ||
        !(map(f1, right.scale(c, g1)) == scaled)) {
      counterexample("scalar interchange",
                     {{"c", to_string(c)}, {"f", left.format(f1)},
                      {"g", right.format(g1)}});
      return v;
    }

    const auto fp = left.random_positive(rng);
    const auto gp = right.random_positive(rng);
    ++v.checks;
    if (!target.is_positive(map(fp, gp)) && !target.is_zero(map(fp, gp))) {
      counterexample("positive on positive pairs",
                     {{"f", left.format(fp)}, {"g", right.format(gp)}});
      return v;
    }

    const auto [d1, d2] = left.random_disjoint_pair(rng);
    ++v.checks;
    if (!target.is_zero(target.meet(map(d1, gp), map(d2, gp)))) {
      counterexample("disjointness in the first slot",
                     {{"f1", left.format(d1)}, {"f2", left.format(d2)},
                      {"g", right.format(gp)}});
      return v;
    }
    const auto [e1, e2] = right.random_disjoint_pair(rng);
    ++v.checks;
    if (!target.is_zero(target.meet(map(fp, e1), map(fp, e2)))) {
      counterexample("disjointness in the second slot",
                     {{"f", left.format(fp)}, {"g1", right.format(e1)},
                      {"g2", right.format(e2)}});
      return v;
    }
  }
  return v;
}

/// A bimorphism Q^n × Q^m -> Q^k given as a callable.
using AtomBimorphism =
    std::function<AtomVector(const AtomVector&, const AtomVector&)>;

struct UniversalPropertyResult {
  Verdict verdict;
  /// T′ with T′(indicator(p, q)) = psi_prime(e_p, e_q).
  LinearLatticeMap induced;
};

/// Builds T′ from `psi_prime` and checks T′∘⊗ = psi_prime on random pairs,
/// that T′ is a Riesz homomorphism, and uniqueness at sample scale: the
/// linear map solved from random pure tensors equals T′, and every sampled
/// Riesz homomorphism agreeing with psi_prime on pure tensors equals T′.
UniversalPropertyResult verify_universal_property(const AtomBimorphism& psi_prime,
                                                  std::size_t n, std::size_t m,
                                                  std::size_t k,
                                                  std::size_t trials, Rng& rng);

/// One term λ·χ_A(a)⊗χ_B(b) of an onto-preimage.
struct PureTensorTerm {
  Rational coeff;
  Elem left;
  Elem right;
};

/// Preimage of h under T via the disjoint-rectangle decomposition of each
/// support of h.
std::vector<PureTensorTerm> onto_preimage(const TensorMap& t,
                                          const PlaceFunction& h);

/// Onto: every h in a spanning set (atoms, unit, `extra`) has a preimage
/// whose T-image is h. Injective: T has full rational rank n·m.
Verdict verify_T_onto_and_injective(const TensorMap& t,
                                    std::span<const PlaceFunction> extra);

}  // namespace balg
