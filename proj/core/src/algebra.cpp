#include "balg/algebra.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <optional>

#include "balg/free_product.hpp"

namespace balg {

struct Algebra::Node {
  AlgebraKind kind = AlgebraKind::powerset;
  int atoms = 0;
  bool trivial = false;
  std::string name;
  std::optional<Algebra> left;
  std::optional<Algebra> right;
};

namespace {

std::uint32_t mask_of(int width) {
  return width == 0 ? 0u : (width >= 32 ? ~0u : ((1u << width) - 1u));
}

bool sorted_unique(const std::vector<std::uint64_t>& v) {
  return std::adjacent_find(v.begin(), v.end(),
                            [](auto a, auto b) { return a >= b; }) == v.end();
}

std::vector<std::uint64_t> set_union(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> set_intersection(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> set_difference(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

IndexSet index_meet(const IndexSet& x, const IndexSet& y) {
  if (!x.cofinite && !y.cofinite)
    return {false, set_intersection(x.support, y.support)};
  if (!x.cofinite) return {false, set_difference(x.support, y.support)};
  if (!y.cofinite) return {false, set_difference(y.support, x.support)};
  return {true, set_union(x.support, y.support)};
}

int lowest_atom(const AtomSet& s) {
  return s.bits == 0 ? s.width : std::countr_zero(s.bits);
}

}  // namespace

Algebra::Algebra(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Algebra Algebra::powerset(int atom_count, std::string name) {
  if (atom_count < 1)
    throw AlgebraError("powerset algebra needs at least one atom");
  if (atom_count > kMaxPowersetAtoms)
    throw AlgebraError("powerset atom count " + std::to_string(atom_count) +
                       " exceeds the cap of " +
                       std::to_string(kMaxPowersetAtoms));
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::powerset;
  node->atoms = atom_count;
  node->name = std::move(name);
  return Algebra(std::move(node));
}

Algebra Algebra::finite_cofinite(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::finite_cofinite;
  node->name = std::move(name);
  return Algebra(std::move(node));
}

Algebra Algebra::trivial(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::powerset;
  node->atoms = 0;
  node->trivial = true;
  node->name = std::move(name);
  return Algebra(std::move(node));
}

Algebra Algebra::free_product(const Algebra& left, const Algebra& right) {
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::free_product;
  node->trivial = left.is_trivial() || right.is_trivial();
  node->left = left;
  node->right = right;
  node->name = left.describe() + "*" + right.describe();
  return Algebra(std::move(node));
}

AlgebraKind Algebra::kind() const { return node_->kind; }
const std::string& Algebra::name() const { return node_->name; }
bool Algebra::is_trivial() const { return node_->trivial; }

int Algebra::atom_count() const {
  if (kind() != AlgebraKind::powerset)
    throw AlgebraError("atom_count is defined for powerset algebras only");
  return node_->atoms;
}

bool Algebra::is_finite() const {
  switch (kind()) {
    case AlgebraKind::powerset:
      return true;
    case AlgebraKind::finite_cofinite:
      return false;
    case AlgebraKind::free_product:
      return is_trivial() || (left().is_finite() && right().is_finite());
  }
  return false;
}

const Algebra& Algebra::left() const {
  if (kind() != AlgebraKind::free_product)
    throw AlgebraError("left factor requested of a non-product algebra");
  return *node_->left;
}

const Algebra& Algebra::right() const {
  if (kind() != AlgebraKind::free_product)
    throw AlgebraError("right factor requested of a non-product algebra");
  return *node_->right;
}

std::string Algebra::describe() const {
  switch (kind()) {
    case AlgebraKind::powerset:
      return is_trivial() ? "trivial" : "P" + std::to_string(node_->atoms);
    case AlgebraKind::finite_cofinite:
      return "FC";
    case AlgebraKind::free_product:
      return "(" + left().describe() + "*" + right().describe() + ")";
  }
  return {};
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.is_trivial() != b.is_trivial()) return false;
  switch (a.kind()) {
    case AlgebraKind::powerset:
      return a.node_->atoms == b.node_->atoms;
    case AlgebraKind::finite_cofinite:
      return true;
    case AlgebraKind::free_product:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool Algebra::contains(const Elem& x) const {
  switch (kind()) {
    case AlgebraKind::powerset: {
      const AtomSet* s = x.atom_set();
      return s && s->width == node_->atoms && (s->bits & ~mask_of(s->width)) == 0;
    }
    case AlgebraKind::finite_cofinite: {
      const IndexSet* s = x.index_set();
      return s && sorted_unique(s->support);
    }
    case AlgebraKind::free_product: {
      const RectForm* r = x.rect_form();
      return r && detail::grid_valid(*this, *r);
    }
  }
  return false;
}

void Algebra::require(const Elem& x) const {
  bool ok = false;
  if (kind() != AlgebraKind::free_product) {
    ok = contains(x);
  } else if (const RectForm* r = x.rect_form()) {
    // Shape-level check only; contains() performs the full canonical check.
    const std::size_t rows = r->left_cells.size();
    const std::size_t cols = r->right_cells.size();
    if (is_trivial()) {
      ok = rows == 0 && cols == 0 && r->active.empty();
    } else {
      ok = rows > 0 && cols > 0 && r->active.size() == rows * cols &&
           left().contains(r->left_cells.front()) &&
           right().contains(r->right_cells.front());
    }
  }
  if (!ok)
    throw AlgebraError("element does not belong to algebra " + describe());
}

Elem Algebra::zero() const {
  switch (kind()) {
    case AlgebraKind::powerset:
      return AtomSet{static_cast<std::uint8_t>(node_->atoms), 0u};
    case AlgebraKind::finite_cofinite:
      return IndexSet{false, {}};
    case AlgebraKind::free_product:
      return detail::grid_zero(*this);
  }
  return {};
}

Elem Algebra::one() const {
  switch (kind()) {
    case AlgebraKind::powerset:
      return AtomSet{static_cast<std::uint8_t>(node_->atoms),
                     mask_of(node_->atoms)};
    case AlgebraKind::finite_cofinite:
      return IndexSet{true, {}};
    case AlgebraKind::free_product:
      return detail::grid_one(*this);
  }
  return {};
}

Elem Algebra::meet(const Elem& x, const Elem& y) const {
  require(x);
  require(y);
  switch (kind()) {
    case AlgebraKind::powerset: {
      const AtomSet& a = *x.atom_set();
      return AtomSet{a.width, a.bits & y.atom_set()->bits};
    }
    case AlgebraKind::finite_cofinite:
      return index_meet(*x.index_set(), *y.index_set());
    case AlgebraKind::free_product:
      return detail::grid_combine(*this, *x.rect_form(), *y.rect_form(),
                                  detail::GridOp::meet);
  }
  return {};
}

Elem Algebra::join(const Elem& x, const Elem& y) const {
  require(x);
  require(y);
  switch (kind()) {
    case AlgebraKind::powerset: {
      const AtomSet& a = *x.atom_set();
      return AtomSet{a.width, a.bits | y.atom_set()->bits};
    }
    case AlgebraKind::finite_cofinite: {
      IndexSet a = *x.index_set();
      IndexSet b = *y.index_set();
      a.cofinite = !a.cofinite;
      b.cofinite = !b.cofinite;
      IndexSet m = index_meet(a, b);
      m.cofinite = !m.cofinite;
      return m;
    }
    case AlgebraKind::free_product:
      return detail::grid_combine(*this, *x.rect_form(), *y.rect_form(),
                                  detail::GridOp::join);
  }
  return {};
}

Elem Algebra::complement(const Elem& x) const {
  require(x);
  switch (kind()) {
    case AlgebraKind::powerset: {
      const AtomSet& a = *x.atom_set();
      return AtomSet{a.width, ~a.bits & mask_of(a.width)};
    }
    case AlgebraKind::finite_cofinite: {
      IndexSet a = *x.index_set();
      a.cofinite = !a.cofinite;
      return a;
    }
    case AlgebraKind::free_product:
      return detail::grid_complement(*x.rect_form());
  }
  return {};
}

Elem Algebra::disjoint_sum(const Elem& x, const Elem& y) const {
  if (kind() == AlgebraKind::free_product) {
    require(x);
    require(y);
    return detail::grid_combine(*this, *x.rect_form(), *y.rect_form(),
                                detail::GridOp::disjoint_sum);
  }
  return join(meet(x, complement(y)), meet(complement(x), y));
}

Elem Algebra::rel_complement_1(const Elem& x, const Elem& y) const {
  return meet(x, complement(meet(x, y)));
}

bool Algebra::leq(const Elem& x, const Elem& y) const {
  return meet(x, y) == x;
}

bool Algebra::is_zero(const Elem& x) const {
  require(x);
  return x == zero();
}

bool Algebra::disjoint(const Elem& x, const Elem& y) const {
  return is_zero(meet(x, y));
}

bool Algebra::precedes(const Elem& x, const Elem& y) const {
  switch (kind()) {
    case AlgebraKind::powerset: {
      const AtomSet& a = *x.atom_set();
      const AtomSet& b = *y.atom_set();
      const int la = lowest_atom(a), lb = lowest_atom(b);
      if (la != lb) return la < lb;
      return a.bits < b.bits;
    }
    case AlgebraKind::finite_cofinite: {
      const IndexSet& a = *x.index_set();
      const IndexSet& b = *y.index_set();
      if (a.cofinite != b.cofinite) return !a.cofinite;
      return a.support < b.support;
    }
    case AlgebraKind::free_product: {
      const RectForm& a = *x.rect_form();
      const RectForm& b = *y.rect_form();
      auto cells_less = [](const Algebra& alg, const std::vector<Elem>& u,
                           const std::vector<Elem>& v) {
        return std::lexicographical_compare(
            u.begin(), u.end(), v.begin(), v.end(),
            [&](const Elem& p, const Elem& q) { return alg.precedes(p, q); });
      };
      if (a.left_cells != b.left_cells)
        return cells_less(left(), a.left_cells, b.left_cells);
      if (a.right_cells != b.right_cells)
        return cells_less(right(), a.right_cells, b.right_cells);
      return a.active < b.active;
    }
  }
  return false;
}

std::vector<Elem> Algebra::atoms() const {
  if (is_trivial())
    throw AlgebraError("the trivial algebra has no atoms");
  switch (kind()) {
    case AlgebraKind::powerset: {
      std::vector<Elem> out;
      for (int i = 0; i < node_->atoms; ++i)
        out.emplace_back(
            AtomSet{static_cast<std::uint8_t>(node_->atoms), 1u << i});
      return out;
    }
    case AlgebraKind::finite_cofinite:
      throw AlgebraError(
          "atoms are not enumerable for the finite-cofinite algebra");
    case AlgebraKind::free_product: {
      if (left().kind() != AlgebraKind::powerset ||
          right().kind() != AlgebraKind::powerset)
        throw AlgebraError("atoms of " + describe() +
                           " are not enumerable: both factors must be finite "
                           "powerset algebras");
      std::vector<Elem> out;
      for (const Elem& p : left().atoms())
        for (const Elem& q : right().atoms())
          out.push_back(rectangle(*this, p, q));
      return out;
    }
  }
  return {};
}

std::vector<Algebra::TaggedCell> Algebra::atomize_tagged(
    std::span<const Elem> generators) const {
  if (is_trivial()) return {};
  for (const Elem& g : generators) require(g);
  std::vector<TaggedCell> cells;
  if (kind() == AlgebraKind::free_product) {
    std::vector<RectForm> grids;
    grids.reserve(generators.size());
    for (const Elem& g : generators) grids.push_back(*g.rect_form());
    for (auto& [grid, inside] : detail::grid_atomize(*this, grids))
      cells.push_back(TaggedCell{Elem(std::move(grid)), std::move(inside)});
  } else {
    cells.push_back(TaggedCell{one(), {}});
    for (const Elem& g : generators) {
      const Elem g_not = complement(g);
      std::vector<TaggedCell> next;
      next.reserve(cells.size() * 2);
      for (TaggedCell& c : cells) {
        Elem in = meet(c.cell, g);
        if (!is_zero(in)) {
          next.push_back(TaggedCell{std::move(in), c.inside});
          next.back().inside.push_back(true);
        }
        Elem out = meet(c.cell, g_not);
        if (!is_zero(out)) {
          next.push_back(TaggedCell{std::move(out), std::move(c.inside)});
          next.back().inside.push_back(false);
        }
      }
      cells = std::move(next);
    }
  }
  std::sort(cells.begin(), cells.end(), [&](const TaggedCell& a, const TaggedCell& b) {
    return precedes(a.cell, b.cell);
  });
  return cells;
}

std::vector<Elem> Algebra::atomize(std::span<const Elem> generators) const {
  std::vector<Elem> out;
  for (TaggedCell& c : atomize_tagged(generators)) out.push_back(std::move(c.cell));
  return out;
}

Elem Algebra::sup_finite(std::span<const Elem> xs) const {
  if (xs.empty()) throw AlgebraError("supremum of an empty family requested");
  Elem acc = xs.front();
  require(acc);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = join(acc, xs[i]);
  return acc;
}

}  // namespace balg
