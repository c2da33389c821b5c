#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace balg {

/// Element of a powerset algebra P(n), n <= 16: the set of atoms below it.
/// The trivial algebra uses width 0, so its only element is both 0 and 1.
struct AtomSet {
  std::uint8_t width = 0;
  std::uint32_t bits = 0;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;
};

/// Element of the finite-cofinite algebra over the natural numbers.
/// `cofinite == false`: the finite set `support`.
/// `cofinite == true`: the complement of `support`.
/// `support` is sorted and duplicate free, so the encoding is unique.
struct IndexSet {
  bool cofinite = false;
  std::vector<std::uint64_t> support;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

struct Elem;

/// Free-product element in grid form: a partition of 1_A into left cells, a
/// partition of 1_B into right cells, and a row-major activity matrix. The
/// element is the join of the rectangles (left_i, right_j) that are active.
///
/// Canonical forms use the coarsest such grid: no two rows are equal and no
/// two columns are equal, and cells are sorted by Algebra::precedes. For a
/// trivial product all three vectors are empty.
struct RectForm {
  std::vector<Elem> left_cells;
  std::vector<Elem> right_cells;
  std::vector<std::uint8_t> active;

  bool at(std::size_t row, std::size_t col) const {
    return active[row * right_cells.size() + col] != 0;
  }

  friend bool operator==(const RectForm& a, const RectForm& b);
};

struct Elem {
  std::variant<AtomSet, IndexSet, RectForm> value;

  Elem() = default;
  Elem(AtomSet s) : value(s) {}
  Elem(IndexSet s) : value(std::move(s)) {}
  Elem(RectForm r) : value(std::move(r)) {}

  const AtomSet* atom_set() const { return std::get_if<AtomSet>(&value); }
  const IndexSet* index_set() const { return std::get_if<IndexSet>(&value); }
  const RectForm* rect_form() const { return std::get_if<RectForm>(&value); }

  friend bool operator==(const Elem&, const Elem&) = default;
};

inline bool operator==(const RectForm& a, const RectForm& b) {
  return a.left_cells == b.left_cells && a.right_cells == b.right_cells &&
         a.active == b.active;
}

}  // namespace balg
