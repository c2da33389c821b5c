#include "balg/place_function.hpp"

#include <algorithm>
#include <map>

#include "balg/expr.hpp"

namespace balg {

PlaceSpace::PlaceSpace(Algebra algebra) : algebra_(std::move(algebra)) {}

PlaceFunction PlaceSpace::unit() const { return chi(algebra_.one()); }

PlaceFunction PlaceSpace::chi(const Elem& x) const {
  algebra_.require(x);
  if (algebra_.is_zero(x)) return {};
  return PlaceFunction({Term{1, x}});
}

PlaceFunction PlaceSpace::assemble(
    std::vector<std::pair<Elem, Rational>> cells) const {
  std::map<Rational, Elem> by_value;
  for (auto& [cell, value] : cells) {
    if (value == 0 || algebra_.is_zero(cell)) continue;
    auto [it, fresh] = by_value.try_emplace(value, cell);
    if (!fresh) it->second = algebra_.join(it->second, cell);
  }
  std::vector<Term> terms;
  terms.reserve(by_value.size());
  for (auto& [value, support] : by_value) terms.push_back(Term{value, support});
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return algebra_.precedes(a.support, b.support);
  });
  return PlaceFunction(std::move(terms));
}

PlaceFunction PlaceSpace::canonicalize(std::span<const Term> raw) const {
  std::vector<Elem> supports;
  supports.reserve(raw.size());
  for (const Term& t : raw) supports.push_back(t.support);
  std::vector<std::pair<Elem, Rational>> cells;
  for (auto& [cell, inside] : algebra_.atomize_tagged(supports)) {
    Rational value = 0;
    for (std::size_t k = 0; k < raw.size(); ++k)
      if (inside[k]) value += raw[k].coeff;
    cells.emplace_back(std::move(cell), std::move(value));
  }
  return assemble(std::move(cells));
}

PlaceFunction PlaceSpace::add_formula(const PlaceFunction& f,
                                    const PlaceFunction& g) const {
  require(f);
  require(g);
  const Algebra& a = algebra_;
  Elem join_x = a.zero();
  Elem join_y = a.zero();
  for (const Term& t : f.terms()) join_x = a.join(join_x, t.support);
  for (const Term& t : g.terms()) join_y = a.join(join_y, t.support);

  std::vector<Term> raw;
  for (const Term& x : f.terms()) {
    for (const Term& y : g.terms()) {
      const Rational sum = x.coeff + y.coeff;
      if (sum == 0) continue;
      Elem both = a.meet(x.support, y.support);
      if (!a.is_zero(both)) raw.push_back(Term{sum, std::move(both)});
    }
  }
  for (const Term& x : f.terms()) {
    Elem rest = a.rel_complement_1(x.support, join_y);
    if (!a.is_zero(rest)) raw.push_back(Term{x.coeff, std::move(rest)});
  }
  for (const Term& y : g.terms()) {
    Elem rest = a.rel_complement_1(y.support, join_x);
    if (!a.is_zero(rest)) raw.push_back(Term{y.coeff, std::move(rest)});
  }
  return canonicalize(raw);
}

template <class Combine>
PlaceFunction PlaceSpace::cellwise(const PlaceFunction& f,
                                   const PlaceFunction& g,
                                   Combine combine) const {
  require(f);
  require(g);
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  std::vector<Elem> supports;
  for (const Term& t : ft) supports.push_back(t.support);
  for (const Term& t : gt) supports.push_back(t.support);
  std::vector<std::pair<Elem, Rational>> cells;
  for (auto& [cell, inside] : algebra_.atomize_tagged(supports)) {
    Rational a = 0, b = 0;
    for (std::size_t k = 0; k < ft.size(); ++k)
      if (inside[k]) a = ft[k].coeff;
    for (std::size_t k = 0; k < gt.size(); ++k)
      if (inside[ft.size() + k]) b = gt[k].coeff;
    Rational v = combine(a, b);
    cells.emplace_back(std::move(cell), std::move(v));
  }
  return assemble(std::move(cells));
}

PlaceFunction PlaceSpace::add_refine(const PlaceFunction& f,
                                     const PlaceFunction& g) const {
  return cellwise(f, g, [](const Rational& a, const Rational& b) { return a + b; });
}

PlaceFunction PlaceSpace::sub(const PlaceFunction& f,
                              const PlaceFunction& g) const {
  return add(f, scale(-1, g));
}

PlaceFunction PlaceSpace::scale(const Rational& c,
                                const PlaceFunction& f) const {
  require(f);
  if (c == 0) return {};
  std::vector<Term> terms = f.terms();
  for (Term& t : terms) t.coeff *= c;
  return PlaceFunction(std::move(terms));
}

PlaceFunction PlaceSpace::meet(const PlaceFunction& f,
                               const PlaceFunction& g) const {
  return cellwise(f, g, [](const Rational& a, const Rational& b) {
    return a < b ? a : b;
  });
}

PlaceFunction PlaceSpace::join(const PlaceFunction& f,
                               const PlaceFunction& g) const {
  return cellwise(f, g, [](const Rational& a, const Rational& b) {
    return a < b ? b : a;
  });
}

PlaceFunction PlaceSpace::abs(const PlaceFunction& f) const {
  return sub(join(f, zero()), meet(f, zero()));
}

PlaceFunction PlaceSpace::pos_part(const PlaceFunction& f) const {
  return join(f, zero());
}

bool PlaceSpace::leq(const PlaceFunction& f, const PlaceFunction& g) const {
  return meet(f, g) == f;
}

bool PlaceSpace::is_positive(const PlaceFunction& f) const {
  require(f);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const Term& t) { return t.coeff > 0; });
}

bool PlaceSpace::is_component(const PlaceFunction& f) const {
  if (!is_positive(f))
    throw AlgebraError("is_component expects a positive place function");
  return meet(f, sub(unit(), f)).is_zero();
}

Elem PlaceSpace::support(const PlaceFunction& f) const {
  Elem acc = algebra_.zero();
  for (const Term& t : f.terms()) acc = algebra_.join(acc, t.support);
  return acc;
}

Rational PlaceSpace::value_at(const PlaceFunction& f, const Elem& cell) const {
  for (const Term& t : f.terms())
    if (algebra_.leq(cell, t.support)) return t.coeff;
  return 0;
}

bool PlaceSpace::equivalent(std::span<const Term> a,
                            std::span<const Term> b) const {
  return canonicalize(a) == canonicalize(b);
}

void PlaceSpace::require(const PlaceFunction& f) const {
  const auto& ts = f.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    algebra_.require(ts[i].support);
    if (ts[i].coeff == 0 || algebra_.is_zero(ts[i].support))
      throw AlgebraError("place function has a zero term");
    if (i > 0 && !algebra_.precedes(ts[i - 1].support, ts[i].support))
      throw AlgebraError("place function terms are out of order");
  }
}

PlaceFunction PlaceSpace::random(Rng& rng) const {
  std::uniform_int_distribution<int> count(0, 4);
  std::vector<Term> raw;
  const int k = count(rng);
  for (int i = 0; i < k; ++i)
    raw.push_back(Term{random_rational(rng, true), random_elem(algebra_, rng)});
  return canonicalize(raw);
}

PlaceFunction PlaceSpace::random_positive(Rng& rng) const {
  return abs(random(rng));
}

std::pair<PlaceFunction, PlaceFunction> PlaceSpace::random_disjoint_pair(
    Rng& rng) const {
  const PlaceFunction f = random_positive(rng);
  const PlaceFunction g = random_positive(rng);
  const Elem split = random_elem(algebra_, rng);
  const Elem other = algebra_.complement(split);
  std::vector<Term> left, right;
  for (const Term& t : f.terms())
    left.push_back(Term{t.coeff, algebra_.meet(t.support, split)});
  for (const Term& t : g.terms())
    right.push_back(Term{t.coeff, algebra_.meet(t.support, other)});
  return {canonicalize(left), canonicalize(right)};
}

std::string PlaceSpace::format(const PlaceFunction& f) const {
  return format_place_function(*this, f);
}

Verdict check_regularity(const PlaceSpace& space, std::span<const Elem> xs,
                         const Elem& s) {
  const Algebra& a = space.algebra();
  Verdict v;
  if (xs.empty()) throw AlgebraError("regularity check needs a nonempty family");
  if (!(a.sup_finite(xs) == s)) {
    v.fail({"precondition", {{"s", format_elem(a, s)},
                             {"sup", format_elem(a, a.sup_finite(xs))}}});
    return v;
  }
  const PlaceFunction top = space.chi(s);
  std::vector<PlaceFunction> images;
  for (const Elem& x : xs) images.push_back(space.chi(x));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ++v.checks;
    if (!space.leq(images[i], top)) {
      v.fail({"chi(s) is not an upper bound",
              {{"x", format_elem(a, xs[i])}, {"s", format_elem(a, s)}}});
      return v;
    }
  }

  std::vector<Elem> generators(xs.begin(), xs.end());
  generators.push_back(s);
  const std::vector<Elem> cells = a.atomize(generators);
  if (cells.size() > 6)
    throw AlgebraError("regularity check limited to 6 generated atoms");

  auto is_upper_bound = [&](const PlaceFunction& h) {
    return std::all_of(images.begin(), images.end(),
                       [&](const PlaceFunction& f) { return space.leq(f, h); });
  };
  auto test_candidate = [&](const PlaceFunction& h) {
    if (!is_upper_bound(h)) return true;
    ++v.checks;
    if (space.leq(top, h)) return true;
    v.fail({"smaller upper bound",
            {{"s", format_elem(a, s)}, {"bound", space.format(h)}}});
    return false;
  };

  // Components χ(y) for every y in the generated subalgebra.
  const std::size_t k = cells.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Elem y = a.zero();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) y = a.join(y, cells[i]);
    if (!test_candidate(space.chi(y))) return v;
  }

  // Place functions with values on the generated atoms from a small grid.
  const Rational grid[] = {Rational(-1), Rational(0), Rational(1, 2),
                           Rational(1), Rational(2)};
  std::vector<std::size_t> digits(k, 0);
  for (;;) {
    std::vector<Term> raw;
    for (std::size_t i = 0; i < k; ++i)
      raw.push_back(Term{grid[digits[i]], cells[i]});
    if (!test_candidate(space.canonicalize(raw))) return v;
    std::size_t i = 0;
    while (i < k && ++digits[i] == std::size(grid)) digits[i++] = 0;
    if (i == k) break;
  }
  return v;
}

}  // namespace balg
