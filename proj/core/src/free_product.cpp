#include "balg/free_product.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace balg {
namespace detail {
namespace {

void check_product(const Algebra& product) {
  if (product.kind() != AlgebraKind::free_product)
    throw AlgebraError("expected a free-product algebra, got " +
                       product.describe());
}

// Merges cells whose rows (or columns, when `by_rows` is false) are equal.
RectForm merge_equal_lines(const Algebra& product, const RectForm& g,
                           bool by_rows) {
  const Algebra& side = by_rows ? product.left() : product.right();
  const std::size_t rows = g.left_cells.size();
  const std::size_t cols = g.right_cells.size();
  const std::size_t lines = by_rows ? rows : cols;
  const std::size_t width = by_rows ? cols : rows;

  std::map<std::vector<std::uint8_t>, std::size_t> group_of;
  std::vector<std::vector<std::uint8_t>> patterns;
  std::vector<Elem> merged;
  for (std::size_t i = 0; i < lines; ++i) {
    std::vector<std::uint8_t> pattern(width);
    for (std::size_t k = 0; k < width; ++k)
      pattern[k] = by_rows ? g.active[i * cols + k] : g.active[k * cols + i];
    const Elem& cell = by_rows ? g.left_cells[i] : g.right_cells[i];
    auto [it, fresh] = group_of.try_emplace(pattern, merged.size());
    if (fresh) {
      merged.push_back(cell);
      patterns.push_back(std::move(pattern));
    } else {
      merged[it->second] = side.join(merged[it->second], cell);
    }
  }

  RectForm out;
  if (by_rows) {
    out.left_cells = std::move(merged);
    out.right_cells = g.right_cells;
    out.active.reserve(out.left_cells.size() * cols);
    for (const auto& p : patterns) out.active.insert(out.active.end(), p.begin(), p.end());
  } else {
    out.left_cells = g.left_cells;
    out.right_cells = std::move(merged);
    const std::size_t new_cols = out.right_cells.size();
    out.active.assign(rows * new_cols, 0);
    for (std::size_t j = 0; j < new_cols; ++j)
      for (std::size_t i = 0; i < rows; ++i)
        out.active[i * new_cols + j] = patterns[j][i];
  }
  return out;
}

std::vector<std::size_t> sorted_order(const Algebra& side,
                                      const std::vector<Elem>& cells) {
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return side.precedes(cells[a], cells[b]);
  });
  return order;
}

// Common refinement of two partitions of 1: the nonzero pairwise meets, each
// tagged with the index of its parent cell in either partition.
struct Refined {
  std::vector<Elem> cells;
  std::vector<std::size_t> parent_x;
  std::vector<std::size_t> parent_y;
};

Refined refine(const Algebra& side, const std::vector<Elem>& xs,
               const std::vector<Elem>& ys) {
  Refined r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      Elem c = side.meet(xs[i], ys[j]);
      if (side.is_zero(c)) continue;
      r.cells.push_back(std::move(c));
      r.parent_x.push_back(i);
      r.parent_y.push_back(j);
    }
  }
  return r;
}

}  // namespace

RectForm grid_zero(const Algebra& product) {
  check_product(product);
  if (product.is_trivial()) return {};
  return RectForm{{product.left().one()}, {product.right().one()}, {0}};
}

RectForm grid_one(const Algebra& product) {
  check_product(product);
  if (product.is_trivial()) return {};
  return RectForm{{product.left().one()}, {product.right().one()}, {1}};
}

RectForm grid_canonical(const Algebra& product, RectForm raw) {
  check_product(product);
  if (product.is_trivial()) return {};
  RectForm g = merge_equal_lines(product, raw, true);
  g = merge_equal_lines(product, g, false);

  const auto row_order = sorted_order(product.left(), g.left_cells);
  const auto col_order = sorted_order(product.right(), g.right_cells);
  RectForm out;
  const std::size_t cols = g.right_cells.size();
  for (std::size_t i : row_order) out.left_cells.push_back(g.left_cells[i]);
  for (std::size_t j : col_order) out.right_cells.push_back(g.right_cells[j]);
  out.active.reserve(g.active.size());
  for (std::size_t i : row_order)
    for (std::size_t j : col_order) out.active.push_back(g.active[i * cols + j]);
  return out;
}

RectForm grid_combine(const Algebra& product, const RectForm& x,
                      const RectForm& y, GridOp op) {
  check_product(product);
  if (product.is_trivial()) return {};
  const auto uniform = [](const RectForm& g, std::uint8_t v) {
    return std::all_of(g.active.begin(), g.active.end(), [v](std::uint8_t a) { return a == v; });
  };
  if (op == GridOp::meet) {
    if (uniform(x, 0) || uniform(y, 0)) return grid_zero(product);
    if (uniform(x, 1)) return y;
    if (uniform(y, 1)) return x;
  } else if (op == GridOp::join) {
    if (uniform(x, 1) || uniform(y, 1)) return grid_one(product);
    if (uniform(x, 0)) return y;
    if (uniform(y, 0)) return x;
  }
  const Refined rows = refine(product.left(), x.left_cells, y.left_cells);
  const Refined cols = refine(product.right(), x.right_cells, y.right_cells);
  RectForm raw;
  raw.left_cells = rows.cells;
  raw.right_cells = cols.cells;
  raw.active.resize(rows.cells.size() * cols.cells.size());
  for (std::size_t i = 0; i < rows.cells.size(); ++i) {
    for (std::size_t j = 0; j < cols.cells.size(); ++j) {
      const bool a = x.at(rows.parent_x[i], cols.parent_x[j]);
      const bool b = y.at(rows.parent_y[i], cols.parent_y[j]);
      bool v = false;
      switch (op) {
        case GridOp::meet: v = a && b; break;
        case GridOp::join: v = a || b; break;
        case GridOp::disjoint_sum: v = a != b; break;
      }
      raw.active[i * cols.cells.size() + j] = v ? 1 : 0;
    }
  }
  if (uniform(raw, 0)) return grid_zero(product);
  if (uniform(raw, 1)) return grid_one(product);
  return grid_canonical(product, std::move(raw));
}

RectForm grid_complement(const RectForm& x) {
  RectForm out = x;
  for (auto& a : out.active) a = a ? 0 : 1;
  return out;
}

namespace {

// Common refinement of the partitions `sides[g]`; parents[c][g] is the index
// of the cell of partition g containing refined cell c.
void refine_all(const Algebra& side, const std::vector<const std::vector<Elem>*>& sides,
                std::vector<Elem>& cells, std::vector<std::vector<std::size_t>>& parents) {
  cells = {side.one()};
  parents = {{}};
  for (const std::vector<Elem>* partition : sides) {
    std::vector<Elem> next;
    std::vector<std::vector<std::size_t>> next_parents;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t k = 0; k < partition->size(); ++k) {
        Elem m = side.meet(cells[c], (*partition)[k]);
        if (side.is_zero(m)) continue;
        next.push_back(std::move(m));
        next_parents.push_back(parents[c]);
        next_parents.back().push_back(k);
      }
    }
    cells = std::move(next);
    parents = std::move(next_parents);
  }
}

}  // namespace

std::vector<std::pair<RectForm, std::vector<bool>>> grid_atomize(
    const Algebra& product, std::span<const RectForm> grids) {
  check_product(product);
  if (product.is_trivial()) return {};
  std::vector<const std::vector<Elem>*> lefts, rights;
  for (const RectForm& g : grids) {
    lefts.push_back(&g.left_cells);
    rights.push_back(&g.right_cells);
  }
  std::vector<Elem> rows, cols;
  std::vector<std::vector<std::size_t>> row_parent, col_parent;
  refine_all(product.left(), lefts, rows, row_parent);
  refine_all(product.right(), rights, cols, col_parent);

  std::map<std::vector<bool>, std::size_t> group_of;
  std::vector<std::vector<bool>> signatures;
  std::vector<std::size_t> group(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<bool> sig(grids.size());
      for (std::size_t g = 0; g < grids.size(); ++g)
        sig[g] = grids[g].at(row_parent[i][g], col_parent[j][g]);
      auto [it, fresh] = group_of.try_emplace(sig, signatures.size());
      if (fresh) signatures.push_back(std::move(sig));
      group[i * cols.size() + j] = it->second;
    }
  }
  std::vector<std::pair<RectForm, std::vector<bool>>> out;
  for (std::size_t k = 0; k < signatures.size(); ++k) {
    RectForm raw{rows, cols, std::vector<std::uint8_t>(group.size())};
    for (std::size_t c = 0; c < group.size(); ++c) raw.active[c] = group[c] == k ? 1 : 0;
    out.emplace_back(grid_canonical(product, std::move(raw)), std::move(signatures[k]));
  }
  return out;
}

bool grid_valid(const Algebra& product, const RectForm& r) {
  check_product(product);
  if (product.is_trivial())
    return r.left_cells.empty() && r.right_cells.empty() && r.active.empty();
  if (r.left_cells.empty() || r.right_cells.empty() ||
      r.active.size() != r.left_cells.size() * r.right_cells.size())
    return false;
  auto partition_ok = [](const Algebra& side, const std::vector<Elem>& cells) {
    for (const Elem& c : cells)
      if (!side.contains(c) || side.is_zero(c)) return false;
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (!side.disjoint(cells[i], cells[j])) return false;
    return side.sup_finite(cells) == side.one();
  };
  if (!partition_ok(product.left(), r.left_cells) ||
      !partition_ok(product.right(), r.right_cells))
    return false;
  for (auto a : r.active)
    if (a > 1) return false;
  return grid_canonical(product, r) == r;
}

}  // namespace detail

bool fp_is_trivial(const Algebra& a, const Algebra& b) {
  return a.is_trivial() || b.is_trivial();
}

Elem normalize(const Algebra& product, std::span<const Rectangle> rects) {
  if (product.kind() != AlgebraKind::free_product)
    throw AlgebraError("normalize needs a free-product algebra");
  const Algebra& a = product.left();
  const Algebra& b = product.right();
  std::vector<Elem> lefts, rights;
  for (const Rectangle& r : rects) {
    a.require(r.left);
    b.require(r.right);
    lefts.push_back(r.left);
    rights.push_back(r.right);
  }
  if (product.is_trivial()) return RectForm{};

  RectForm raw;
  raw.left_cells = a.atomize(lefts);
  raw.right_cells = b.atomize(rights);
  const std::size_t cols = raw.right_cells.size();
  raw.active.assign(raw.left_cells.size() * cols, 0);
  for (const Rectangle& r : rects) {
    std::vector<std::size_t> in_cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (b.leq(raw.right_cells[j], r.right)) in_cols.push_back(j);
    if (in_cols.empty()) continue;
    for (std::size_t i = 0; i < raw.left_cells.size(); ++i) {
      if (!a.leq(raw.left_cells[i], r.left)) continue;
      for (std::size_t j : in_cols) raw.active[i * cols + j] = 1;
    }
  }
  return detail::grid_canonical(product, std::move(raw));
}

Elem rectangle(const Algebra& product, const Elem& a, const Elem& b) {
  const Rectangle r{a, b};
  return normalize(product, std::span<const Rectangle>(&r, 1));
}

Elem embed_left(const Algebra& product, const Elem& a) {
  return rectangle(product, a, product.right().one());
}

Elem embed_right(const Algebra& product, const Elem& b) {
  return rectangle(product, product.left().one(), b);
}

std::vector<Rectangle> decompose_disjoint(const Algebra& product,
                                          const Elem& x) {
  product.require(x);
  std::vector<Rectangle> out;
  if (product.is_trivial()) return out;
  const RectForm& g = *x.rect_form();
  const Algebra& a = product.left();
  const Algebra& b = product.right();
  const std::size_t cols = g.right_cells.size();

  std::vector<std::vector<std::uint8_t>> row_patterns;
  for (std::size_t i = 0; i < g.left_cells.size(); ++i) {
    std::vector<std::uint8_t> pattern(g.active.begin() + i * cols,
                                      g.active.begin() + (i + 1) * cols);
    if (std::none_of(pattern.begin(), pattern.end(), [](auto v) { return v; }))
      continue;
    // Adjacent rows with identical activity collapse into one rectangle.
    if (!row_patterns.empty() && row_patterns.back() == pattern) {
      out.back().left = a.join(out.back().left, g.left_cells[i]);
      continue;
    }
    Elem right = b.zero();
    for (std::size_t j = 0; j < cols; ++j)
      if (pattern[j]) right = b.join(right, g.right_cells[j]);
    out.push_back(Rectangle{g.left_cells[i], std::move(right)});
    row_patterns.push_back(std::move(pattern));
  }
  return out;
}

Elem induced_hom(const HomSpec& phi_left, const HomSpec& phi_right,
                 const Algebra& product, const Elem& x) {
  if (product.kind() != AlgebraKind::free_product)
    throw AlgebraError("induced_hom needs a free-product source");
  if (!(phi_left.source == product.left()) ||
      !(phi_right.source == product.right()))
    throw AlgebraError("factor homomorphisms do not start at the factors of " +
                       product.describe());
  if (!(phi_left.target == phi_right.target))
    throw AlgebraError("factor homomorphisms have different targets");
  const Algebra& d = phi_left.target;
  product.require(x);
  if (product.is_trivial()) return d.zero();

  const RectForm& g = *x.rect_form();
  std::vector<Elem> left_images, right_images;
  for (const Elem& c : g.left_cells) left_images.push_back(phi_left.apply(c));
  for (const Elem& c : g.right_cells) right_images.push_back(phi_right.apply(c));
  Elem acc = d.zero();
  for (std::size_t i = 0; i < g.left_cells.size(); ++i)
    for (std::size_t j = 0; j < g.right_cells.size(); ++j)
      if (g.at(i, j)) acc = d.join(acc, d.meet(left_images[i], right_images[j]));
  return acc;
}

HomSpec make_induced_hom(const HomSpec& phi_left, const HomSpec& phi_right,
                         const Algebra& product, std::size_t trials,
                         std::mt19937_64& rng) {
  for (const HomSpec* phi : {&phi_left, &phi_right}) {
    const bool exhaustive = phi->source.kind() == AlgebraKind::powerset &&
                            phi->source.atom_count() <= 6;
    const HomCheck check = check_homomorphism(*phi, exhaustive, trials, rng);
    if (!check.pass)
      throw AlgebraError("factor map is not a Boolean homomorphism (axiom " +
                         to_string(*check.violated) + ")");
  }
  return HomSpec::from_rule(
      product, phi_left.target,
      [phi_left, phi_right, product](const Elem& x) {
        return induced_hom(phi_left, phi_right, product, x);
      });
}

}  // namespace balg
