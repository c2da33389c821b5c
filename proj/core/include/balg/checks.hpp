#pragma once

#include <cstddef>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/atom_model.hpp"
#include "balg/homomorphism.hpp"
#include "balg/place_function.hpp"
#include "balg/random.hpp"
#include "balg/verdict.hpp"

namespace balg {

// Property checks shared by the verification suites. Each stops at its first
// counterexample and records it as a witness.

/// Lattice, complement and ⊕ laws, the order, and relative complement on
/// random triples.
Verdict check_boolean_axioms(const Algebra& a, std::size_t trials, Rng& rng);
/// atoms() of a nontrivial powerset algebra are the singletons in order.
Verdict check_atoms(const Algebra& a);
/// evaluate() against direct bit computation on random expressions.
Verdict check_evaluate_oracle(const Algebra& a, std::size_t trials, Rng& rng);

/// Records a failed HomCheck as a counterexample witness.
Verdict hom_verdict(const HomSpec& h, const HomCheck& c, const std::string& what);
/// Identity, random atom maps into small powersets, and for the
/// finite-cofinite algebra a two-point map into P2.
Verdict check_homomorphism_samples(const Algebra& a, std::size_t trials, Rng& rng);
/// The constant-to-1 map; a passing check here is a vacuous verifier.
HomSpec broken_homomorphism(const Algebra& a);

/// Canonical maps, injectivity, nonzero rectangles, decomposition and
/// Boolean laws in A⊗B.
Verdict check_free_product(const Algebra& product, std::size_t trials, Rng& rng);
/// Atom count n·m for P(n)⊗P(m), and 2^(n·m) distinct elements when
/// n·m <= 12.
Verdict check_product_counts(int n, int m);
/// One random pair of factor homomorphisms into a common powerset: the
/// induced map commutes with both embeddings and is unique on samples.
Verdict check_induced_universal(const Algebra& product, std::size_t trials, Rng& rng);

Verdict check_addition_oracle(const PlaceSpace& space, std::size_t trials, Rng& rng);
Verdict check_riesz_axioms(const PlaceSpace& space, std::size_t trials, Rng& rng);
/// Exhaustive for powerset algebras with at most 5 atoms, sampled otherwise.
Verdict check_chi_isomorphism(const PlaceSpace& space, std::size_t trials, Rng& rng);
Verdict check_regularity_samples(const PlaceSpace& space, std::size_t trials, Rng& rng);

/// ψ is a bimorphism and does not depend on the chosen representations.
Verdict check_psi(const PsiMap& psi, std::size_t trials, Rng& rng);
/// (f, g) ↦ ψ(f, g) + ψ(f, e_B): additive in f but not in g.
PlaceFunction broken_bimorphism(const PsiMap& psi, const PlaceFunction& f,
                                const PlaceFunction& g);
Verdict check_tensor_map(const TensorMap& t, std::size_t trials, Rng& rng);
/// T′ for ψ in coordinates, for ⊗ itself, and for ψ followed by a random
/// permutation of the product atoms.
Verdict check_universal_property_models(const TensorMap& t, std::size_t trials, Rng& rng);

/// Principal bands, disjoint vectors giving disjoint bands, |B(E)|, completeness of B(E)
/// for n <= 4 and ideals against bands for n <= 6.
Verdict check_bands(std::size_t n, std::size_t trials, Rng& rng);

}  // namespace balg
