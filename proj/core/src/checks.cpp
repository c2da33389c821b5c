#include "balg/checks.hpp"

#include <algorithm>
#include <numeric>

#include "balg/bands.hpp"
#include "balg/certificate.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/free_product.hpp"

namespace balg {
namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

template <class MakeFields>
bool expect(Verdict& v, bool ok, const char* law, MakeFields fields) {
  ++v.checks;
  if (!ok) v.fail({law, fields()});
  return ok;
}

// ------------------------------------------------------------ Boolean laws

struct RandomExpr {
  std::string text;
  std::uint32_t bits;
};

RandomExpr random_expr(int n, int depth, Rng& rng) {
  const std::uint32_t full = (1u << n) - 1;
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  const int kind = pick(rng);
  if (kind == 0) {
    std::uniform_int_distribution<std::uint32_t> bits(0, full);
    const std::uint32_t b = bits(rng);
    std::string text = "{";
    for (int i = 0; i < n; ++i)
      if (b & (1u << i)) text += (text.size() > 1 ? "," : "") + std::to_string(i + 1);
    return {text + "}", b};
  }
  if (kind == 1) {
    std::bernoulli_distribution coin(0.5);
    return coin(rng) ? RandomExpr{"1", full} : RandomExpr{"0", 0};
  }
  if (kind == 2) {
    RandomExpr inner = random_expr(n, depth - 1, rng);
    return {"!" + inner.text, ~inner.bits & full};
  }
  const RandomExpr l = random_expr(n, depth - 1, rng);
  const RandomExpr r = random_expr(n, depth - 1, rng);
  switch (kind) {
    case 3: return {"(" + l.text + " & " + r.text + ")", l.bits & r.bits};
    case 4: return {"(" + l.text + " | " + r.text + ")", l.bits | r.bits};
    default: return {"(" + l.text + " (+) " + r.text + ")", l.bits ^ r.bits};
  }
}

}  // namespace

Verdict check_boolean_axioms(const Algebra& a, std::size_t trials, Rng& rng) {
  Verdict v;
  const Elem zero = a.zero(), one = a.one();
  for (std::size_t t = 0; t < trials; ++t) {
    const Elem x = random_elem(a, rng), y = random_elem(a, rng), z = random_elem(a, rng);
    auto xyz = [&] {
      return Fields{{"x", format_elem(a, x)}, {"y", format_elem(a, y)}, {"z", format_elem(a, z)}};
    };
    const bool ok =
        expect(v, a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z)), "meet associative", xyz) &&
        expect(v, a.join(a.join(x, y), z) == a.join(x, a.join(y, z)), "join associative", xyz) &&
        expect(v, a.meet(x, y) == a.meet(y, x), "meet commutative", xyz) &&
        expect(v, a.join(x, y) == a.join(y, x), "join commutative", xyz) &&
        expect(v, a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z)),
               "meet distributes over join", xyz) &&
        expect(v, a.join(x, a.meet(y, z)) == a.meet(a.join(x, y), a.join(x, z)),
               "join distributes over meet", xyz) &&
        expect(v, a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x, "absorption",
               xyz) &&
        expect(v, a.meet(x, a.complement(x)) == zero && a.join(x, a.complement(x)) == one,
               "complement", xyz) &&
        expect(v, a.disjoint_sum(a.disjoint_sum(x, y), z) == a.disjoint_sum(x, a.disjoint_sum(y, z)),
               "disjoint sum associative", xyz) &&
        expect(v, a.disjoint_sum(x, y) == a.disjoint_sum(y, x), "disjoint sum commutative", xyz) &&
        expect(v, a.disjoint_sum(x, zero) == x && a.is_zero(a.disjoint_sum(x, x)),
               "disjoint sum identity and self-inverse", xyz) &&
        expect(v,
               a.disjoint_sum(x, y) ==
                   a.join(a.meet(x, a.complement(y)), a.meet(a.complement(x), y)),
               "disjoint sum definition", xyz) &&
        expect(v, a.leq(x, x) && a.leq(zero, x) && a.leq(x, one), "order bounds", xyz) &&
        expect(v, !(a.leq(x, y) && a.leq(y, x)) || x == y, "order antisymmetric", xyz) &&
        expect(v, !(a.leq(x, y) && a.leq(y, z)) || a.leq(x, z), "order transitive", xyz) &&
        expect(v, a.leq(x, y) == (a.join(x, y) == y), "order via join", xyz) &&
        expect(v, a.rel_complement_1(x, y) == a.meet(x, a.complement(a.meet(x, y))),
               "relative complement", xyz) &&
        expect(v, a.rel_complement_1(x, zero) == x && a.is_zero(a.rel_complement_1(x, x)),
               "relative complement edge cases", xyz);
    if (!ok) return v;
  }
  return v;
}

Verdict check_atoms(const Algebra& a) {
  Verdict v;
  const auto atoms = a.atoms();
  expect(v, atoms.size() == static_cast<std::size_t>(a.atom_count()), "atom count", [&] {
    return Fields{{"atoms", std::to_string(atoms.size())}};
  });
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const AtomSet* s = atoms[i].atom_set();
    if (!expect(v, s && s->bits == (1u << i), "atom order", [&] {
          return Fields{{"index", std::to_string(i)}, {"atom", format_elem(a, atoms[i])}};
        }))
      return v;
  }
  return v;
}

Verdict check_evaluate_oracle(const Algebra& a, std::size_t trials, Rng& rng) {
  Verdict v;
  if (a.kind() != AlgebraKind::powerset || a.is_trivial()) return v;
  for (std::size_t t = 0; t < trials; ++t) {
    const RandomExpr e = random_expr(a.atom_count(), 3, rng);
    const Elem got = evaluate(a, e.text);
    if (!expect(v, got.atom_set()->bits == e.bits, "evaluate agrees with set computation", [&] {
          return Fields{{"expr", e.text}, {"got", format_elem(a, got)}};
        }))
      return v;
  }
  return v;
}

// -------------------------------------------------------------- morphisms

Verdict hom_verdict(const HomSpec& h, const HomCheck& c, const std::string& what) {
  Verdict v;
  v.checks = c.pairs_checked + 1;
  if (c.pass) return v;
  Witness w{"counterexample", {{"map", what}, {"axiom", to_string(*c.violated)}}};
  const Algebra& s = h.source;
  const Algebra& t = h.target;
  if (c.x) w.fields.emplace_back("x", format_elem(s, *c.x));
  if (c.y) w.fields.emplace_back("y", format_elem(s, *c.y));
  if (c.x && c.y) {
    const Elem hx = h.apply(*c.x), hy = h.apply(*c.y);
    switch (*c.violated) {
      case HomAxiom::meet:
        w.fields.emplace_back("h(x&y)", format_elem(t, h.apply(s.meet(*c.x, *c.y))));
        w.fields.emplace_back("h(x)&h(y)", format_elem(t, t.meet(hx, hy)));
        break;
      case HomAxiom::disjoint_sum:
        w.fields.emplace_back("h(x(+)y)", format_elem(t, h.apply(s.disjoint_sum(*c.x, *c.y))));
        w.fields.emplace_back("h(x)(+)h(y)", format_elem(t, t.disjoint_sum(hx, hy)));
        break;
      case HomAxiom::join:
        w.fields.emplace_back("h(x|y)", format_elem(t, h.apply(s.join(*c.x, *c.y))));
        w.fields.emplace_back("h(x)|h(y)", format_elem(t, t.join(hx, hy)));
        break;
      case HomAxiom::unit:
        break;
    }
  } else if (c.x) {
    w.fields.emplace_back("h(1)", format_elem(t, h.apply(*c.x)));
  }
  v.fail(std::move(w));
  return v;
}

namespace {

HomSpec random_atom_hom(const Algebra& source, const Algebra& target, Rng& rng) {
  std::uniform_int_distribution<int> atom(0, source.atom_count() - 1);
  std::vector<int> map(static_cast<std::size_t>(target.atom_count()));
  for (int& p : map) p = atom(rng);
  return HomSpec::from_atom_map(source, target, std::move(map));
}

// x ↦ {1 if j ∈ x} ∪ {2 if x is cofinite}: the two ultrafilters at j and at
// infinity.
HomSpec two_point_hom(const Algebra& fc, std::uint64_t j) {
  const Algebra p2 = Algebra::powerset(2);
  return HomSpec::from_rule(fc, p2, [fc, j](const Elem& x) -> Elem {
    const IndexSet& s = *x.index_set();
    std::uint32_t bits = 0;
    if (fc.leq(IndexSet{false, {j}}, x)) bits |= 1;
    if (s.cofinite) bits |= 2;
    return AtomSet{2, bits};
  });
}

HomSpec random_factor_hom(const Algebra& source, const Algebra& target, Rng& rng) {
  if (source.kind() == AlgebraKind::finite_cofinite) {
    std::uniform_int_distribution<std::uint64_t> j(0, kSampleIndexRange - 1);
    return two_point_hom(source, j(rng));
  }
  return random_atom_hom(source, target, rng);
}

}  // namespace

Verdict check_homomorphism_samples(const Algebra& a, std::size_t trials, Rng& rng) {
  Verdict v;
  const bool small_powerset = a.kind() == AlgebraKind::powerset && a.atom_count() <= 12;
  const HomSpec id = HomSpec::identity(a);
  v.merge(hom_verdict(id, check_homomorphism(id, small_powerset, trials, rng), "identity"));
  if (!v.pass) return v;

  if (a.kind() == AlgebraKind::powerset && !a.is_trivial()) {
    std::uniform_int_distribution<int> width(1, 4);
    for (int i = 0; i < 4 && v.pass; ++i) {
      const HomSpec h = random_atom_hom(a, Algebra::powerset(width(rng)), rng);
      const bool exhaustive = a.atom_count() <= 6;
      v.merge(hom_verdict(h, check_homomorphism(h, exhaustive, trials, rng), "atom map"));
    }
    // The three-atom example: P2 -> P1 with q ↦ 1.
    if (a.atom_count() == 2) {
      const HomSpec h = HomSpec::from_atom_map(a, Algebra::powerset(1), {0});
      const HomCheck c = check_homomorphism(h, true, 0, rng);
      v.merge(hom_verdict(h, c, "atom map q -> 1"));
      expect(v, c.pairs_checked == 16, "exhaustive over 4 elements", [&] {
        return Fields{{"pairs", std::to_string(c.pairs_checked)}};
      });
    }
  } else if (a.kind() == AlgebraKind::finite_cofinite) {
    for (std::uint64_t j : {0u, 3u}) {
      const HomSpec h = two_point_hom(a, j);
      v.merge(hom_verdict(h, check_homomorphism(h, false, trials, rng), "two-point map"));
    }
    // A generator table on fin{0}, fin{1}, extended through its atoms.
    const Algebra p2 = Algebra::powerset(2);
    const HomSpec table = HomSpec::from_table(
        a, p2, {{IndexSet{false, {0}}, AtomSet{2, 1}}, {IndexSet{false, {1}}, AtomSet{2, 0}}});
    v.merge(hom_verdict(table, check_homomorphism(table, false, trials, rng), "generator table"));
  }
  return v;
}

HomSpec broken_homomorphism(const Algebra& a) {
  return HomSpec::from_rule(a, a, [a](const Elem&) { return a.one(); });
}

// ----------------------------------------------------------- free products

Verdict check_free_product(const Algebra& product, std::size_t trials, Rng& rng) {
  Verdict v;
  const Algebra& A = product.left();
  const Algebra& B = product.right();
  if (fp_is_trivial(A, B)) {
    expect(v, product.is_zero(product.one()), "trivial factor collapses the product", [] {
      return Fields{};
    });
    return v;
  }
  auto fe = [&](const Algebra& alg, const Elem& x) { return format_elem(alg, x); };

  const HomSpec left = HomSpec::from_rule(A, product, [product](const Elem& x) {
    return embed_left(product, x);
  });
  const HomSpec right = HomSpec::from_rule(B, product, [product](const Elem& x) {
    return embed_right(product, x);
  });
  v.merge(hom_verdict(left, check_homomorphism(left, false, trials, rng), "embed_left"));
  if (!v.pass) return v;
  v.merge(hom_verdict(right, check_homomorphism(right, false, trials, rng), "embed_right"));
  if (!v.pass) return v;

  for (std::size_t t = 0; t < trials; ++t) {
    const Elem x = random_elem(A, rng), y = random_elem(A, rng);
    const Elem u = random_elem(B, rng), w = random_elem(B, rng);
    const bool ok =
        expect(v, x == y || !(embed_left(product, x) == embed_left(product, y)),
               "embed_left injective", [&] { return Fields{{"x", fe(A, x)}, {"y", fe(A, y)}}; }) &&
        expect(v, u == w || !(embed_right(product, u) == embed_right(product, w)),
               "embed_right injective", [&] { return Fields{{"u", fe(B, u)}, {"w", fe(B, w)}}; });
    if (!ok) return v;

    const Elem a = random_nonzero_elem(A, rng), b = random_nonzero_elem(B, rng);
    if (!expect(v, !product.is_zero(rectangle(product, a, b)), "nonzero rectangle", [&] {
          return Fields{{"a", fe(A, a)}, {"b", fe(B, b)}};
        }))
      return v;

    const Elem z = random_elem(product, rng);
    const auto parts = decompose_disjoint(product, z);
    Elem rejoined = product.zero();
    bool disjoint = true, nonzero = true, below = true;
    std::vector<Elem> rects;
    for (const Rectangle& r : parts) rects.push_back(rectangle(product, r.left, r.right));
    for (std::size_t i = 0; i < rects.size(); ++i) {
      nonzero = nonzero && !product.is_zero(rects[i]);
      below = below && product.leq(rects[i], z);
      for (std::size_t j = i + 1; j < rects.size(); ++j)
        disjoint = disjoint && product.disjoint(rects[i], rects[j]);
      rejoined = product.join(rejoined, rects[i]);
    }
    auto zf = [&] { return Fields{{"x", fe(product, z)}}; };
    const bool dec_ok =
        expect(v, disjoint && nonzero && below, "decomposition pieces", zf) &&
        expect(v, rejoined == z && normalize(product, parts) == z, "decomposition rejoins", zf) &&
        expect(v, parts.empty() == product.is_zero(z), "empty decomposition iff zero", zf) &&
        expect(v, product.is_zero(product.meet(z, product.complement(z))), "x & !x = 0", zf) &&
        expect(v, evaluate(product, fe(product, z)) == z, "text round trip", zf);
    if (!dec_ok) return v;
  }
  v.merge(check_boolean_axioms(product, std::max<std::size_t>(trials / 4, 1), rng));
  return v;
}

Verdict check_product_counts(int n, int m) {
  Verdict v;
  const Algebra product = Algebra::free_product(Algebra::powerset(n), Algebra::powerset(m));
  const auto atoms = product.atoms();
  const std::size_t nm = static_cast<std::size_t>(n * m);
  if (!expect(v, atoms.size() == nm, "atom count", [&] {
        return Fields{{"atoms", std::to_string(atoms.size())}, {"expected", std::to_string(nm)}};
      }))
    return v;
  for (const Elem& x : atoms) {
    bool minimal = !product.is_zero(x);
    for (const Elem& y : atoms)
      if (!(y == x)) minimal = minimal && product.disjoint(x, y);
    if (!expect(v, minimal, "atoms are pairwise disjoint and nonzero", [&] {
          return Fields{{"atom", format_elem(product, x)}};
        }))
      return v;
  }
  Elem total = product.zero();
  for (const Elem& x : atoms) total = product.join(total, x);
  if (!expect(v, total == product.one(), "atoms join to 1", [] { return Fields{}; })) return v;

  if (nm <= 12) {
    // Element for mask = element for mask without its lowest bit, joined
    // with that atom.
    std::vector<Elem> elems(std::size_t{1} << nm);
    elems[0] = product.zero();
    for (std::size_t mask = 1; mask < elems.size(); ++mask) {
      const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
      elems[mask] = product.join(elems[mask & (mask - 1)], atoms[low]);
    }
    std::sort(elems.begin(), elems.end(),
              [&](const Elem& a, const Elem& b) { return product.precedes(a, b); });
    const std::size_t distinct = static_cast<std::size_t>(
        std::unique(elems.begin(), elems.end()) - elems.begin());
    expect(v, distinct == (std::size_t{1} << nm), "element count", [&] {
      return Fields{{"elements", std::to_string(distinct)},
                    {"expected", std::to_string(std::size_t{1} << nm)}};
    });
  }
  return v;
}

Verdict check_induced_universal(const Algebra& product, std::size_t trials, Rng& rng) {
  Verdict v;
  const Algebra& A = product.left();
  const Algebra& B = product.right();
  if (fp_is_trivial(A, B)) return v;
  const bool has_fc = A.kind() == AlgebraKind::finite_cofinite ||
                      B.kind() == AlgebraKind::finite_cofinite;
  std::uniform_int_distribution<int> width(1, 4);
  const Algebra d = Algebra::powerset(has_fc ? 2 : width(rng));
  const HomSpec phi_a = random_factor_hom(A, d, rng);
  const HomSpec phi_b = random_factor_hom(B, d, rng);
  const HomSpec h = make_induced_hom(phi_a, phi_b, product, trials, rng);

  auto commutes = [&](const Algebra& factor, const HomSpec& phi, bool left_side) {
    std::vector<Elem> sample;
    if (factor.kind() == AlgebraKind::powerset && factor.atom_count() <= 3) {
      sample = all_elements(factor);
    } else {
      for (std::size_t t = 0; t < trials; ++t) sample.push_back(random_elem(factor, rng));
    }
    for (const Elem& x : sample) {
      const Elem e = left_side ? embed_left(product, x) : embed_right(product, x);
      if (!expect(v, h.apply(e) == phi.apply(x),
                  left_side ? "induced commutes with embed_left" : "induced commutes with embed_right",
                  [&] { return Fields{{"x", format_elem(factor, x)}}; }))
        return false;
    }
    return true;
  };
  if (!commutes(A, phi_a, true) || !commutes(B, phi_b, false)) return v;
  v.merge(hom_verdict(h, check_homomorphism(h, false, trials, rng), "induced"));
  if (!v.pass) return v;

  // A second candidate built from the disjoint decomposition agrees on
  // rectangles, hence must agree everywhere.
  auto other = [&](const Elem& x) {
    Elem acc = d.zero();
    for (const Rectangle& r : decompose_disjoint(product, x))
      acc = d.join(acc, d.meet(phi_a.apply(r.left), phi_b.apply(r.right)));
    return acc;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const Elem x = random_elem(product, rng);
    if (!expect(v, other(x) == h.apply(x), "uniqueness", [&] {
          return Fields{{"x", format_elem(product, x)}};
        }))
      return v;
  }
  expect(v, h.apply(product.one()) == d.one() && h.apply(product.zero()) == d.zero(),
         "induced preserves 0 and 1", [] { return Fields{}; });
  return v;
}

// ---------------------------------------------------------- place functions

Verdict check_addition_oracle(const PlaceSpace& space, std::size_t trials, Rng& rng) {
  Verdict v;
  for (std::size_t t = 0; t < trials; ++t) {
    const PlaceFunction f = space.random(rng), g = space.random(rng);
    if (!expect(v, space.add_formula(f, g) == space.add_refine(f, g), "add_formula = add_refine", [&] {
          return Fields{{"f", space.format(f)}, {"g", space.format(g)},
                        {"add_formula", space.format(space.add_formula(f, g))},
                        {"add_refine", space.format(space.add_refine(f, g))}};
        }))
      return v;
  }
  return v;
}

Verdict check_riesz_axioms(const PlaceSpace& space, std::size_t trials, Rng& rng) {
  Verdict v;
  const Algebra& a = space.algebra();
  for (std::size_t t = 0; t < trials; ++t) {
    const PlaceFunction f = space.random(rng), g = space.random(rng), h = space.random(rng);
    const Rational c = random_rational(rng), d = random_rational(rng);
    const Rational cpos = random_positive_rational(rng);
    auto fgh = [&] {
      return Fields{{"f", space.format(f)}, {"g", space.format(g)}, {"h", space.format(h)},
                    {"c", to_string(c)}, {"d", to_string(d)}};
    };
    const bool ok =
        expect(v, space.add(f, g) == space.add(g, f), "addition commutative", fgh) &&
        expect(v, space.add(space.add(f, g), h) == space.add(f, space.add(g, h)),
               "addition associative", fgh) &&
        expect(v, space.add(f, space.zero()) == f && space.sub(f, f).is_zero(),
               "zero and negatives", fgh) &&
        expect(v, space.scale(c, space.add(f, g)) == space.add(space.scale(c, f), space.scale(c, g)),
               "scalar distributes over addition", fgh) &&
        expect(v, space.scale(c + d, f) == space.add(space.scale(c, f), space.scale(d, f)),
               "addition of scalars distributes", fgh) &&
        expect(v, space.scale(c * d, f) == space.scale(c, space.scale(d, f)), "scalar associative",
               fgh) &&
        expect(v, space.scale(1, f) == f && space.scale(0, f).is_zero(), "unit scalar", fgh) &&
        expect(v, space.add(space.meet(f, g), space.join(f, g)) == space.add(f, g),
               "meet plus join", fgh) &&
        expect(v, !space.leq(f, g) || space.leq(space.add(f, h), space.add(g, h)),
               "order compatible with addition", fgh) &&
        expect(v, space.scale(cpos, space.pos_part(f)) == space.pos_part(space.scale(cpos, f)),
               "positive scaling commutes with the positive part", fgh) &&
        expect(v, space.abs(space.scale(-1, f)) == space.abs(f), "abs(-f) = abs(f)", fgh) &&
        expect(v, space.add(f, space.scale(-1, f)).is_zero(), "f + (-1)f = 0", fgh);
    if (!ok) return v;

    // The span of components: f rebuilt from its terms.
    PlaceFunction rebuilt = space.zero();
    for (const Term& term : f.terms())
      rebuilt = space.add(rebuilt, space.scale(term.coeff, space.chi(term.support)));
    if (!expect(v, rebuilt == f, "linear span of components", fgh)) return v;

    if (a.kind() == AlgebraKind::powerset && !a.is_trivial()) {
      // Archimedean at finite scale: n·p <= q fails once n > max(q)/min(p).
      const PlaceFunction p = space.abs(space.random(rng));
      if (p.is_zero()) continue;
      const PlaceFunction q = space.add(p, space.abs(space.random(rng)));
      Rational lo = p.terms().front().coeff, hi = 0;
      for (const Term& term : p.terms()) lo = std::min(lo, term.coeff);
      for (const Term& term : q.terms()) hi = std::max(hi, term.coeff);
      const Rational ratio = hi / lo;
      const Integer n = numerator(ratio) / denominator(ratio) + 1;
      if (!expect(v, !space.leq(space.scale(Rational(n), p), q), "Archimedean bound", [&] {
            return Fields{{"p", space.format(p)}, {"q", space.format(q)}, {"n", n.str()}};
          }))
        return v;
    }
  }
  return v;
}

Verdict check_chi_isomorphism(const PlaceSpace& space, std::size_t trials, Rng& rng) {
  Verdict v;
  const Algebra& a = space.algebra();
  const bool exhaustive = a.kind() == AlgebraKind::powerset && a.atom_count() <= 5;
  std::vector<Elem> elems;
  if (exhaustive) {
    elems = all_elements(a);
  } else {
    for (std::size_t t = 0; t < std::max<std::size_t>(trials / 4, 2); ++t)
      elems.push_back(random_elem(a, rng));
  }
  std::vector<PlaceFunction> chis;
  for (const Elem& x : elems) chis.push_back(space.chi(x));
  if (!expect(v, space.chi(a.one()) == space.unit(), "chi(1) = e", [] { return Fields{}; }))
    return v;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto xf = [&] { return Fields{{"x", format_elem(a, elems[i])}}; };
    if (!expect(v, space.is_component(chis[i]), "chi(x) is a component", xf)) return v;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto xy = [&] {
        return Fields{{"x", format_elem(a, elems[i])}, {"y", format_elem(a, elems[j])}};
      };
      const bool ok =
          expect(v, (elems[i] == elems[j]) == (chis[i] == chis[j]), "chi injective", xy) &&
          expect(v, space.chi(a.meet(elems[i], elems[j])) == space.meet(chis[i], chis[j]),
                 "chi preserves meet", xy) &&
          expect(v,
                 space.chi(a.disjoint_sum(elems[i], elems[j])) ==
                     space.abs(space.sub(chis[i], chis[j])),
                 "chi preserves disjoint sum", xy);
      if (!ok) return v;
    }
  }
  if (!exhaustive || a.is_trivial()) return v;

  // Onto the components: among functions with values in {0, 1/2, 1, 2} the
  // components are exactly the chi(x).
  const auto atoms = a.atoms();
  const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  std::vector<std::size_t> digits(atoms.size(), 0);
  for (;;) {
    std::vector<Term> raw;
    AtomSet support{static_cast<std::uint8_t>(atoms.size()), 0};
    bool zero_one = true;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      raw.push_back(Term{grid[digits[i]], atoms[i]});
      if (digits[i] == 2) support.bits |= 1u << i;
      if (digits[i] != 0 && digits[i] != 2) zero_one = false;
    }
    const PlaceFunction f = space.canonicalize(raw);
    const bool component = space.is_component(f);
    if (!expect(v, component == zero_one && (!component || f == space.chi(support)),
                "components are exactly the chi(x)", [&] { return Fields{{"f", space.format(f)}}; }))
      return v;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == std::size(grid)) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return v;
}

Verdict check_regularity_samples(const PlaceSpace& space, std::size_t trials, Rng& rng) {
  Verdict v;
  const Algebra& a = space.algebra();
  std::uniform_int_distribution<int> count(1, 2);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Elem> xs(static_cast<std::size_t>(count(rng)));
    for (Elem& x : xs) x = random_elem(a, rng);
    const Elem s = a.sup_finite(xs);
    Verdict r = check_regularity(space, xs, s);
    v.merge(std::move(r));
    if (!v.pass) return v;

    // A proper upper bound must be rejected by the precondition.
    const Elem bigger = a.join(s, random_elem(a, rng));
    if (!(bigger == s)) {
      const Verdict wrong = check_regularity(space, xs, bigger);
      if (!expect(v, !wrong.pass, "regularity rejects a non-supremum", [&] {
            return Fields{{"s", format_elem(a, bigger)}};
          }))
        return v;
    }
  }
  return v;
}

// -------------------------------------------------------------- tensors

Verdict check_psi(const PsiMap& psi, std::size_t trials, Rng& rng) {
  Verdict v = verify_bimorphism(psi, psi.left(), psi.right(), psi.product(), trials, rng);
  if (!v.pass) return v;
  const Algebra& A = psi.left().algebra();
  const Algebra& B = psi.right().algebra();
  auto split = [&](const PlaceFunction& f, const Algebra& alg) {
    std::vector<Term> raw;
    const Elem cut = random_elem(alg, rng);
    for (const Term& t : f.terms()) {
      for (const Elem& piece : {alg.meet(t.support, cut), alg.meet(t.support, alg.complement(cut))})
        if (!alg.is_zero(piece)) raw.push_back(Term{t.coeff, piece});
    }
    return raw;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const PlaceFunction f = psi.left().random(rng), g = psi.right().random(rng);
    const auto fs = split(f, A);
    const auto gs = split(g, B);
    if (!expect(v, psi.on_terms(fs, gs) == psi(f, g), "representation independence", [&] {
          return Fields{{"f", psi.left().format(f)}, {"g", psi.right().format(g)}};
        }))
      return v;
  }
  return v;
}

PlaceFunction broken_bimorphism(const PsiMap& psi, const PlaceFunction& f,
                                const PlaceFunction& g) {
  return psi.product().add(psi(f, g), psi(f, psi.right().unit()));
}

Verdict check_tensor_map(const TensorMap& t, std::size_t trials, Rng& rng) {
  Verdict v;
  const PsiMap& psi = t.psi();
  const PlaceSpace& ab = psi.product();
  const AtomSpace& src = t.source();
  const std::size_t nm = t.left_dim() * t.right_dim();

  for (std::size_t c = 0; c < nm; ++c) {
    if (!expect(v, t.coordinates(t.apply(src.basis(c))) == src.basis(c) &&
                       t.apply(src.basis(c)) == ab.chi(t.product_atoms()[c]),
                "basis maps to the product atoms", [&] {
                  return Fields{{"index", std::to_string(c)}};
                }))
      return v;
  }
  if (!expect(v, t.apply(src.ones()) == ab.unit(), "T(1) = unit", [] { return Fields{}; }))
    return v;

  for (std::size_t i = 0; i < trials; ++i) {
    const AtomVector x = src.random(rng), y = src.random(rng);
    const Rational c = random_rational(rng), d = random_rational(rng);
    auto xy = [&] { return Fields{{"v", src.format(x)}, {"w", src.format(y)}}; };
    const bool ok =
        expect(v,
               t.apply(src.add(src.scale(c, x), src.scale(d, y))) ==
                   ab.add(ab.scale(c, t.apply(x)), ab.scale(d, t.apply(y))),
               "T linear", xy) &&
        expect(v, ab.abs(t.apply(x)) == t.apply(src.abs(x)), "|T(v)| = T(|v|)", xy) &&
        expect(v, ab.join(t.apply(x), t.apply(y)) == t.apply(src.join(x, y)),
               "T(v | w) = T(v) | T(w)", xy) &&
        expect(v, t.coordinates(t.apply(x)) == x, "coordinates invert T", xy);
    if (!ok) return v;

    const PlaceFunction f = psi.left().random(rng), g = psi.right().random(rng);
    if (!expect(v, t.apply(t.tensor_of(f, g)) == psi(f, g), "T after tensor equals psi", [&] {
          return Fields{{"f", psi.left().format(f)}, {"g", psi.right().format(g)}};
        }))
      return v;
  }

  const Algebra& prod = ab.algebra();
  const Elem first = t.product_atoms().front();
  std::vector<PlaceFunction> extra{ab.chi(prod.complement(first))};
  for (int i = 0; i < 3; ++i) extra.push_back(ab.random(rng));
  v.merge(verify_T_onto_and_injective(t, extra));
  if (!v.pass) return v;

  const AtomSpace left(t.left_dim()), right(t.right_dim());
  v.merge(verify_bimorphism(pure_tensor, left, right, src, trials, rng));
  return v;
}

Verdict check_universal_property_models(const TensorMap& t, std::size_t trials, Rng& rng) {
  Verdict v;
  const PsiMap& psi = t.psi();
  const std::size_t n = t.left_dim(), m = t.right_dim(), nm = n * m;
  const AtomSpace left(n), right(m), target(nm);

  const AtomBimorphism psi_coords = [&](const AtomVector& f, const AtomVector& g) {
    return t.coordinates(psi(from_atom_model(psi.left(), f), from_atom_model(psi.right(), g)));
  };
  std::vector<std::size_t> perm(nm);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const AtomBimorphism permuted = [&](const AtomVector& f, const AtomVector& g) {
    const AtomVector x = psi_coords(f, g);
    AtomVector out = target.zero();
    for (std::size_t i = 0; i < nm; ++i) out.values[perm[i]] = x.values[i];
    return out;
  };
  LinearLatticeMap perm_matrix{nm, nm, std::vector<Rational>(nm * nm)};
  for (std::size_t i = 0; i < nm; ++i) perm_matrix.at(perm[i], i) = 1;
  LinearLatticeMap expected_perm{nm, nm, std::vector<Rational>(nm * nm)};
  for (std::size_t r = 0; r < nm; ++r)
    for (std::size_t c = 0; c < nm; ++c)
      for (std::size_t k = 0; k < nm; ++k)
        expected_perm.at(r, c) += perm_matrix.at(r, k) * t.matrix().at(k, c);

  struct Case {
    const char* name;
    AtomBimorphism map;
    LinearLatticeMap expected;
  };
  const Case cases[] = {
      {"psi in coordinates", psi_coords, t.matrix()},
      {"tensor map itself", AtomBimorphism(pure_tensor), LinearLatticeMap::identity(nm)},
      {"psi then an atom permutation", permuted, expected_perm},
  };
  const std::size_t sample = std::max<std::size_t>(trials / 4, 4);
  for (const Case& c : cases) {
    Verdict pre = verify_bimorphism(c.map, left, right, target, sample, rng);
    v.merge(std::move(pre));
    if (!v.pass) return v;
    UniversalPropertyResult r = verify_universal_property(c.map, n, m, nm, sample, rng);
    v.merge(std::move(r.verdict));
    if (!v.pass) return v;
    if (!expect(v, r.induced == c.expected, "induced map matches", [&] {
          return Fields{{"case", c.name}};
        }))
      return v;
  }
  return v;
}

// ------------------------------------------------------------------ bands

Verdict check_bands(std::size_t n, std::size_t trials, Rng& rng) {
  Verdict v;
  const AtomSpace space(n);
  const bool enumerate = n <= 6;
  const std::vector<Band> bands = enumerate ? all_bands(n) : std::vector<Band>{};

  if (!expect(v, principal_band(space.zero()).members == 0 &&
                     principal_band(space.ones()).members == (n >= 32 ? ~0u : (1u << n) - 1),
              "principal bands of 0 and 1", [] { return Fields{}; }))
    return v;

  for (std::size_t t = 0; t < trials; ++t) {
    const AtomVector f = space.random(rng);
    const Band pf = principal_band(f);
    auto ff = [&] { return Fields{{"f", space.format(f)}}; };
    if (!expect(v, pf.contains(f), "[f] contains f", ff)) return v;
    if (enumerate) {
      for (const Band& b : bands) {
        if (b.contains(f) && !expect(v, pf.leq(b), "[f] is the smallest band containing f", ff))
          return v;
      }
      // The ideal generated by f: basis vectors e_i with e_i <= c|f| for
      // some c, found as c = 1/|f_i|.
      const AtomVector af = space.abs(f);
      Band ideal{n, 0};
      for (std::size_t i = 0; i < n; ++i)
        if (af.values[i] != 0 && space.leq(space.basis(i), space.scale(1 / af.values[i], af)))
          ideal.members |= 1u << i;
      if (!expect(v, ideal == pf, "ideal and band generated by f coincide", ff)) return v;
    }

    const auto [d1, d2] = space.random_disjoint_pair(rng);
    const bool disjoint = space.is_zero(space.meet(space.abs(d1), space.abs(d2)));
    if (!expect(v, !disjoint || bands_disjoint(d1, d2), "disjoint elements have disjoint bands",
                [&] { return Fields{{"f", space.format(d1)}, {"g", space.format(d2)}}; }))
      return v;
  }

  if (n <= 10) {
    const std::size_t count = all_bands(n).size();
    if (!expect(v, count == (std::size_t{1} << n), "|B(E)| = 2^n", [&] {
          return Fields{{"bands", std::to_string(count)}};
        }))
      return v;
  }
  if (n <= 4) {
    const Certificate c = check_finite_completeness(band_algebra(n), static_cast<int>(n));
    v.merge(validate_certificate(c));
  }
  return v;
}

}  // namespace balg
