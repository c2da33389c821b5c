#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/random.hpp"
#include "balg/rational.hpp"
#include "balg/verdict.hpp"

namespace balg {

struct Term {
  Rational coeff;
  Elem support;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A place function Σ λᵢ χ(xᵢ) in canonical form: supports pairwise disjoint
/// and nonzero, coefficients nonzero and pairwise distinct, terms ordered by
/// Algebra::precedes on supports. Build values through PlaceSpace.
class PlaceFunction {
 public:
  PlaceFunction() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const PlaceFunction&, const PlaceFunction&) = default;

 private:
  friend class PlaceSpace;
  explicit PlaceFunction(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

/// The Riesz space C(A) of place functions over a backend A, with strong
/// unit e = χ(1).
class PlaceSpace {
 public:
  using value_type = PlaceFunction;

  explicit PlaceSpace(Algebra algebra);

  const Algebra& algebra() const { return algebra_; }

  PlaceFunction zero() const { return {}; }
  /// The strong unit e = χ(1_A).
  PlaceFunction unit() const;
  /// 1·χ(x).
  PlaceFunction chi(const Elem& x) const;

  /// Refines supports to the atoms of the subalgebra they generate, sums
  /// coefficients cellwise, drops zero cells and merges cells that share a
  /// coefficient.
  PlaceFunction canonicalize(std::span<const Term> raw) const;

  /// Addition by the three-sum formula over xᵢ∧yⱼ, xᵢ −₁ ⋁yⱼ and yⱼ −₁ ⋁xᵢ.
  PlaceFunction add_formula(const PlaceFunction& f, const PlaceFunction& g) const;
  /// Addition by joint refinement and cellwise sums; the oracle for add_formula.
  PlaceFunction add_refine(const PlaceFunction& f, const PlaceFunction& g) const;
  PlaceFunction add(const PlaceFunction& f, const PlaceFunction& g) const {
    return add_formula(f, g);
  }
  PlaceFunction sub(const PlaceFunction& f, const PlaceFunction& g) const;
  PlaceFunction scale(const Rational& c, const PlaceFunction& f) const;

  PlaceFunction meet(const PlaceFunction& f, const PlaceFunction& g) const;
  PlaceFunction join(const PlaceFunction& f, const PlaceFunction& g) const;
  /// f ∨ 0 − (f ∧ 0).
  PlaceFunction abs(const PlaceFunction& f) const;
  PlaceFunction pos_part(const PlaceFunction& f) const;

  bool leq(const PlaceFunction& f, const PlaceFunction& g) const;
  bool is_positive(const PlaceFunction& f) const;
  /// f ∧ (e − f) = 0. Requires f ≥ 0.
  bool is_component(const PlaceFunction& f) const;

  /// Join of the supports.
  Elem support(const PlaceFunction& f) const;
  /// Coefficient on `cell`, which must lie below one term's support or be
  /// disjoint from all of them.
  Rational value_at(const PlaceFunction& f, const Elem& cell) const;

  /// Equality as place functions, decided on canonical forms.
  bool equivalent(std::span<const Term> a, std::span<const Term> b) const;

  /// Throws AlgebraError unless f is a canonical place function over A.
  void require(const PlaceFunction& f) const;

  // Sampling support for property checks.
  PlaceFunction random(Rng& rng) const;
  PlaceFunction random_positive(Rng& rng) const;
  /// f1, f2 ≥ 0 with f1 ∧ f2 = 0, built by splitting along a random element.
  std::pair<PlaceFunction, PlaceFunction> random_disjoint_pair(Rng& rng) const;
  std::string format(const PlaceFunction& f) const;
  bool is_zero(const PlaceFunction& f) const { return f.is_zero(); }

  /// Pairwise disjoint cells paired with values; drops zeros, merges equal
  /// values, sorts.
  PlaceFunction assemble(std::vector<std::pair<Elem, Rational>> cells) const;

 private:
  template <class Combine>
  PlaceFunction cellwise(const PlaceFunction& f, const PlaceFunction& g,
                         Combine combine) const;

  Algebra algebra_;
};

/// Whether χ(s) is the least upper bound of {χ(x) : x ∈ xs} inside C(A),
/// where s is the supremum of xs in A. Candidate upper bounds are all
/// components χ(y) and all place functions with values in {−1, 0, ½, 1, 2}
/// on the atoms of the subalgebra generated by xs and s (at most 6 atoms).
Verdict check_regularity(const PlaceSpace& space, std::span<const Elem> xs,
                         const Elem& s);

}  // namespace balg
