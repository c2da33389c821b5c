#pragma once

#include <span>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/homomorphism.hpp"

namespace balg {

/// ε_A(left) ∧ ε_B(right).
struct Rectangle {
  Elem left;
  Elem right;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// True iff either factor is the one-element algebra; the free product then
/// has exactly one element.
bool fp_is_trivial(const Algebra& a, const Algebra& b);

/// Canonical grid form of the join of `rects` inside `product`.
Elem normalize(const Algebra& product, std::span<const Rectangle> rects);

Elem rectangle(const Algebra& product, const Elem& a, const Elem& b);

/// ε_A and ε_B.
Elem embed_left(const Algebra& product, const Elem& a);
Elem embed_right(const Algebra& product, const Elem& b);

/// Pairwise disjoint nonzero rectangles whose join is x: one rectangle per
/// grid row (active cells of the row joined), with rows of identical
/// activity merged. Empty iff x = 0.
std::vector<Rectangle> decompose_disjoint(const Algebra& product,
                                          const Elem& x);

/// The homomorphism A⊗B -> D determined by phi_left: A -> D and
/// phi_right: B -> D: join over active cells of phi_left(row) ∧ phi_right(col).
Elem induced_hom(const HomSpec& phi_left, const HomSpec& phi_right,
                 const Algebra& product, const Elem& x);

/// induced_hom packaged as a HomSpec after both factor maps pass
/// check_homomorphism. Throws AlgebraError when either does not.
HomSpec make_induced_hom(const HomSpec& phi_left, const HomSpec& phi_right,
                         const Algebra& product, std::size_t trials,
                         std::mt19937_64& rng);

namespace detail {

enum class GridOp { meet, join, disjoint_sum };

RectForm grid_combine(const Algebra& product, const RectForm& x,
                      const RectForm& y, GridOp op);
RectForm grid_complement(const RectForm& x);
/// Coarsens to the unique grid with pairwise distinct rows and columns and
/// sorts cells.
RectForm grid_canonical(const Algebra& product, RectForm raw);
RectForm grid_zero(const Algebra& product);
RectForm grid_one(const Algebra& product);
bool grid_valid(const Algebra& product, const RectForm& r);
/// Atoms of the subalgebra generated by `grids`, each with its membership
/// in every generator, computed on the common refinement of their grids.
std::vector<std::pair<RectForm, std::vector<bool>>> grid_atomize(
    const Algebra& product, std::span<const RectForm> grids);

}  // namespace detail
}  // namespace balg
