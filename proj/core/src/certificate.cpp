#include "balg/certificate.hpp"

#include <algorithm>

#include "balg/atom_model.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"
#include "balg/homomorphism.hpp"

namespace balg {

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::exhaustive_complete ? "exhaustive_complete"
                                                      : "no_supremum";
}

Certificate check_finite_completeness(const Algebra& a, int max_atoms) {
  if (a.kind() != AlgebraKind::powerset)
    throw AlgebraError("exhaustive completeness needs a powerset algebra, got " +
                       a.describe());
  if (a.atom_count() > max_atoms)
    throw AlgebraError("exhaustive completeness is capped at " +
                       std::to_string(max_atoms) + " atoms, " + a.describe() +
                       " has " + std::to_string(a.atom_count()));
  const std::vector<Elem> elems = all_elements(a);
  const std::size_t k = elems.size();

  // below[u]: bitmask of the elements x with x ≤ u.
  std::vector<std::uint64_t> below(k, 0);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t x = 0; x < k; ++x)
      if (a.leq(elems[x], elems[u])) below[u] |= std::uint64_t{1} << x;

  Certificate c;
  c.kind = CertificateKind::exhaustive_complete;
  c.algebra = a;
  c.family = "every nonempty subset";
  const std::uint64_t subsets = (std::uint64_t{1} << k) - 1;
  std::vector<Elem> members;
  for (std::uint64_t s = 1; s <= subsets; ++s) {
    auto is_upper = [&](std::size_t u) { return (below[u] & s) == s; };
    std::size_t least = k;
    for (std::size_t u = 0; u < k && least == k; ++u) {
      if (!is_upper(u)) continue;
      bool below_all = true;
      for (std::size_t w = 0; w < k && below_all; ++w)
        if (is_upper(w) && !(below[w] >> u & 1)) below_all = false;
      if (below_all) least = u;
    }
    const bool ok = least < k;
    members.clear();
    for (std::size_t x = 0; x < k; ++x)
      if (s >> x & 1) members.push_back(elems[x]);
    if (!ok || !(a.sup_finite(members) == elems[least]))
      throw AlgebraError("subset without least upper bound in " + a.describe());
    ++c.subsets_checked;
  }
  return c;
}

namespace {

bool in_index_set(const IndexSet& s, std::uint64_t n) {
  const bool listed = std::binary_search(s.support.begin(), s.support.end(), n);
  return s.cofinite ? !listed : listed;
}

std::uint64_t smallest_member(const IndexSet& s, std::uint64_t from = 0,
                              std::uint64_t step = 1) {
  std::uint64_t n = from;
  while (!in_index_set(s, n)) n += step;
  return n;
}

const IndexSet& index_set_of(const Elem& x) {
  const IndexSet* s = x.index_set();
  if (!s) throw AlgebraError("expected a finite-cofinite element");
  return *s;
}

void require_fc(const Algebra& a) {
  if (a.kind() != AlgebraKind::finite_cofinite)
    throw AlgebraError("the even-singleton family lives in FC, not " + a.describe());
}

void require_fc_product(const Algebra& a) {
  if (a.kind() != AlgebraKind::free_product ||
      a.left().kind() != AlgebraKind::finite_cofinite ||
      a.right().kind() != AlgebraKind::finite_cofinite)
    throw AlgebraError("the diagonal family lives in FC*FC, not " + a.describe());
}

std::size_t cofinite_cell(const std::vector<Elem>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (index_set_of(cells[i]).cofinite) return i;
  throw AlgebraError("grid has no cofinite cell");
}

}  // namespace

Improvement improve_upper_bound_evens(const Algebra& fc, const Elem& u) {
  require_fc(fc);
  fc.require(u);
  const IndexSet& s = index_set_of(u);
  if (!s.cofinite) {
    const std::uint64_t missed = smallest_member(IndexSet{true, s.support}, 0, 2);
    return NotUpperBound{{missed}};
  }
  for (std::uint64_t n : s.support)
    if (n % 2 == 0) return NotUpperBound{{n}};
  const std::uint64_t k = smallest_member(s, 1, 2);
  const Elem improved = fc.meet(u, fc.complement(IndexSet{false, {k}}));
  return ImprovementStep{u, {k}, improved};
}

Improvement improve_upper_bound_diagonal(const Algebra& product, const Elem& u) {
  require_fc_product(product);
  product.require(u);
  const RectForm& g = *u.rect_form();
  const std::size_t row = cofinite_cell(g.left_cells);
  const std::size_t col = cofinite_cell(g.right_cells);

  std::vector<std::uint64_t> exceptional;
  for (const auto* cells : {&g.left_cells, &g.right_cells})
    for (const Elem& c : *cells)
      for (std::uint64_t n : index_set_of(c).support) exceptional.push_back(n);
  std::sort(exceptional.begin(), exceptional.end());
  exceptional.erase(std::unique(exceptional.begin(), exceptional.end()),
                    exceptional.end());

  if (!g.at(row, col)) {
    const std::uint64_t b = exceptional.empty() ? 0 : exceptional.back() + 1;
    return NotUpperBound{{b, b}};
  }
  auto cell_of = [](const std::vector<Elem>& cells, std::uint64_t n) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (in_index_set(index_set_of(cells[i]), n)) return i;
    throw AlgebraError("grid cells do not cover index " + std::to_string(n));
  };
  for (std::uint64_t n : exceptional)
    if (!g.at(cell_of(g.left_cells, n), cell_of(g.right_cells, n)))
      return NotUpperBound{{n, n}};

  const IndexSet& row_cell = index_set_of(g.left_cells[row]);
  const IndexSet& col_cell = index_set_of(g.right_cells[col]);
  const std::uint64_t m = smallest_member(row_cell);
  std::uint64_t m2 = smallest_member(col_cell);
  if (m2 == m) m2 = smallest_member(col_cell, m + 1);
  const Elem removed = rectangle(product, IndexSet{false, {m}}, IndexSet{false, {m2}});
  const Elem improved = product.meet(u, product.complement(removed));
  return ImprovementStep{u, {m, m2}, improved};
}

namespace {

template <class Improve>
Certificate certify(const Algebra& a, const Elem& start, std::size_t steps,
                    WitnessFamily family, std::string description,
                    Improve improve) {
  Certificate c;
  c.kind = CertificateKind::no_supremum;
  c.algebra = a;
  c.family = std::move(description);
  c.witness_family = family;
  Elem u = start;
  for (std::size_t i = 0; i < steps; ++i) {
    Improvement next = improve(a, u);
    if (auto* missed = std::get_if<NotUpperBound>(&next)) {
      std::string where;
      for (std::uint64_t n : missed->missed)
        where += (where.empty() ? "" : ",") + std::to_string(n);
      throw AlgebraError(format_elem(a, u) + " is not an upper bound of the family"
                         " (misses " + where + ")");
    }
    ImprovementStep step = std::get<ImprovementStep>(std::move(next));
    u = step.improved;
    c.steps.push_back(std::move(step));
  }
  return c;
}

}  // namespace

Certificate certify_evens(const Algebra& fc, const Elem& start, std::size_t steps) {
  return certify(fc, start, steps, WitnessFamily::evens,
                 "even singletons fin{2k}", improve_upper_bound_evens);
}

Certificate certify_diagonal(const Algebra& product, const Elem& start,
                             std::size_t steps) {
  return certify(product, start, steps, WitnessFamily::diagonal,
                 "diagonal rect(fin{n}, fin{n})", improve_upper_bound_diagonal);
}

Verdict check_bounded_suprema_exhaustive(const PlaceSpace& space,
                                         std::size_t max_family) {
  const Algebra& a = space.algebra();
  if (a.kind() != AlgebraKind::powerset || a.is_trivial() || a.atom_count() > 3)
    throw AlgebraError("exhaustive bounded suprema need P(n) with n <= 3");
  const auto atoms = a.atoms();
  const std::size_t n = atoms.size();

  std::vector<PlaceFunction> universe;
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= 3;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Term> raw;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3)
      raw.push_back(Term{Rational(static_cast<int>(c % 3) - 1), atoms[i]});
    universe.push_back(space.canonicalize(raw));
  }

  Verdict v;
  std::vector<std::size_t> pick;
  auto check_family = [&]() {
    PlaceFunction s = universe[pick[0]];
    for (std::size_t i = 1; i < pick.size(); ++i) s = space.join(s, universe[pick[i]]);
    ++v.checks;
    for (std::size_t i : pick) {
      if (!space.leq(universe[i], s)) {
        v.fail({"join is not an upper bound", {{"member", space.format(universe[i])}}});
        return false;
      }
    }
    for (const Elem& atom : atoms) {
      const Rational top = space.value_at(s, atom);
      const bool attained = std::any_of(pick.begin(), pick.end(), [&](std::size_t i) {
        return space.value_at(universe[i], atom) == top;
      });
      if (!attained) {
        v.fail({"supremum value not attained", {{"sup", space.format(s)},
                                                 {"atom", format_elem(a, atom)}}});
        return false;
      }
    }
    return true;
  };
  // Every strictly increasing index tuple of length 1..max_family.
  for (std::size_t size = 1; size <= max_family && size <= universe.size(); ++size) {
    pick.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      if (!check_family()) return v;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == universe.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return v;
}

Verdict check_bounded_suprema_sampled(std::size_t dim, std::size_t trials, Rng& rng) {
  const AtomSpace space(dim);
  Verdict v;
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<AtomVector> family(size(rng));
    for (auto& f : family) f = space.random(rng);
    AtomVector s = family.front();
    for (const auto& f : family) s = space.join(s, f);
    ++v.checks;
    for (std::size_t i = 0; i < dim; ++i) {
      const bool attained = std::any_of(family.begin(), family.end(), [&](const AtomVector& f) {
        return f.values[i] == s.values[i];
      });
      if (!attained ||
          !std::all_of(family.begin(), family.end(),
                       [&](const AtomVector& f) { return space.leq(f, s); })) {
        v.fail({"bounded family without supremum", {{"sup", space.format(s)}}});
        return v;
      }
    }
  }
  return v;
}

}  // namespace balg
