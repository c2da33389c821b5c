#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "balg/elem.hpp"
#include "balg/errors.hpp"

namespace balg {

enum class AlgebraKind { powerset, finite_cofinite, free_product };

inline constexpr int kMaxPowersetAtoms = 16;

/// A Boolean algebra backend together with all of its lattice operations.
///
/// Three backends exist: finite powerset algebras P(n) (atoms are indexed
/// 1..n in text and 0..n-1 internally), the finite-cofinite algebra over the
/// natural numbers, and the free product of two backends in grid normal form.
/// The trivial one-element algebra is a flagged descriptor; its elements use
/// the zero-width powerset encoding.
///
/// Algebra is a cheap value handle. Equality is structural and ignores names.
/// Every element representation is unique, so Elem equality is mathematical
/// equality.
class Algebra {
 public:
  static Algebra powerset(int atom_count, std::string name = {});
  static Algebra finite_cofinite(std::string name = {});
  static Algebra trivial(std::string name = {});
  static Algebra free_product(const Algebra& left, const Algebra& right);

  AlgebraKind kind() const;
  const std::string& name() const;
  /// One-element algebra. A free product is trivial iff one factor is.
  bool is_trivial() const;
  /// Number of atoms of a powerset backend (0 for the trivial algebra).
  int atom_count() const;
  /// Powerset, trivial, or a free product of finite algebras.
  bool is_finite() const;
  const Algebra& left() const;
  const Algebra& right() const;

  /// Compact descriptor such as "P3", "FC", "trivial" or "(P2*P3)".
  std::string describe() const;

  bool contains(const Elem& x) const;
  /// Throws AlgebraError when x does not belong to this algebra.
  void require(const Elem& x) const;

  Elem zero() const;
  Elem one() const;
  Elem meet(const Elem& x, const Elem& y) const;
  Elem join(const Elem& x, const Elem& y) const;
  Elem complement(const Elem& x) const;
  /// (x ∧ y′) ∨ (x′ ∧ y).
  Elem disjoint_sum(const Elem& x, const Elem& y) const;
  /// The complement of x ∧ y relative to x, x ∧ (x ∧ y)′.
  Elem rel_complement_1(const Elem& x, const Elem& y) const;
  bool leq(const Elem& x, const Elem& y) const;
  bool is_zero(const Elem& x) const;
  bool disjoint(const Elem& x, const Elem& y) const;

  /// Deterministic total order used to lay out cells and place-function
  /// terms. For pairwise disjoint elements it orders powerset elements by
  /// smallest atom, and finite-cofinite elements finite-first by smallest
  /// member.
  bool precedes(const Elem& x, const Elem& y) const;

  /// Minimal nonzero elements in index order. Defined for nontrivial powerset
  /// algebras and for free products of two such algebras.
  std::vector<Elem> atoms() const;

  /// Nonzero atoms of the finite subalgebra generated by `generators`
  /// (all nonzero signed meets), sorted by precedes. Empty for trivial.
  std::vector<Elem> atomize(std::span<const Elem> generators) const;

  /// atomize, with each cell tagged by which generators contain it.
  struct TaggedCell {
    Elem cell;
    std::vector<bool> inside;
  };
  std::vector<TaggedCell> atomize_tagged(std::span<const Elem> generators) const;

  /// Join of a nonempty finite family. Throws AlgebraError when empty.
  Elem sup_finite(std::span<const Elem> xs) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Node;
  explicit Algebra(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

}  // namespace balg
