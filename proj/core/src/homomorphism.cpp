#include "balg/homomorphism.hpp"

#include <algorithm>

#include "balg/random.hpp"

namespace balg {

HomSpec HomSpec::identity(const Algebra& a) {
  if (a.kind() == AlgebraKind::powerset && !a.is_trivial()) {
    std::vector<int> map(static_cast<std::size_t>(a.atom_count()));
    for (int q = 0; q < a.atom_count(); ++q) map[q] = q;
    return from_atom_map(a, a, std::move(map));
  }
  return from_rule(a, a, [](const Elem& x) { return x; });
}

HomSpec HomSpec::from_atom_map(const Algebra& source, const Algebra& target,
                               std::vector<int> atom_map) {
  HomSpec h{source, target, {}, std::move(atom_map), {}};
  h.validate();
  return h;
}

HomSpec HomSpec::from_table(const Algebra& source, const Algebra& target,
                            std::vector<std::pair<Elem, Elem>> images) {
  HomSpec h{source, target, std::move(images), std::nullopt, {}};
  h.validate();
  return h;
}

HomSpec HomSpec::from_rule(const Algebra& source, const Algebra& target,
                           std::function<Elem(const Elem&)> rule) {
  HomSpec h{source, target, {}, std::nullopt, std::move(rule)};
  h.validate();
  return h;
}

void HomSpec::validate() const {
  if (atom_map) {
    if (source.kind() != AlgebraKind::powerset ||
        target.kind() != AlgebraKind::powerset)
      throw AlgebraError("atom_map needs powerset source and target");
    if (static_cast<int>(atom_map->size()) != target.atom_count())
      throw AlgebraError("atom_map must assign a source atom to every target atom");
    for (int p : *atom_map)
      if (p < 0 || p >= source.atom_count())
        throw AlgebraError("atom_map refers to a source atom out of range");
    return;
  }
  if (rule) return;
  if (generator_images.empty())
    throw AlgebraError("homomorphism needs an atom_map, a rule or generator images");
  for (const auto& [x, y] : generator_images) {
    source.require(x);
    target.require(y);
  }
}

Elem HomSpec::apply(const Elem& x) const {
  source.require(x);
  if (atom_map) {
    const std::uint32_t bits = x.atom_set()->bits;
    AtomSet out{static_cast<std::uint8_t>(target.atom_count()), 0u};
    for (std::size_t q = 0; q < atom_map->size(); ++q)
      if (bits & (1u << (*atom_map)[q])) out.bits |= 1u << q;
    return out;
  }
  if (rule) {
    Elem y = rule(x);
    target.require(y);
    return y;
  }
  for (const auto& [from, to] : generator_images)
    if (from == x) return to;

  // Extension through the atoms of the subalgebra generated by the domain.
  std::vector<Elem> domain;
  for (const auto& entry : generator_images) domain.push_back(entry.first);
  const std::vector<Elem> cells = source.atomize(domain);
  Elem covered = source.zero();
  Elem image = target.zero();
  for (const Elem& c : cells) {
    if (!source.leq(c, x)) continue;
    covered = source.join(covered, c);
    Elem cell_image = target.one();
    for (const auto& [g, g_image] : generator_images)
      cell_image = target.meet(cell_image, source.leq(c, g)
                                               ? g_image
                                               : target.complement(g_image));
    image = target.join(image, cell_image);
  }
  if (!(covered == x))
    throw AlgebraError("element lies outside the subalgebra generated by the "
                       "homomorphism's generator images");
  return image;
}

std::string to_string(HomAxiom axiom) {
  switch (axiom) {
    case HomAxiom::meet: return "(i) meet";
    case HomAxiom::disjoint_sum: return "(ii) disjoint sum";
    case HomAxiom::unit: return "(iii) unit";
    case HomAxiom::join: return "finite join";
  }
  return {};
}

std::vector<Elem> all_elements(const Algebra& a) {
  if (a.kind() != AlgebraKind::powerset)
    throw AlgebraError("element enumeration needs a powerset algebra");
  const int n = a.atom_count();
  std::vector<Elem> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    out.emplace_back(AtomSet{static_cast<std::uint8_t>(n), bits});
  return out;
}

HomCheck check_homomorphism(const HomSpec& h, bool exhaustive,
                            std::size_t trials, std::mt19937_64& rng) {
  h.validate();
  const Algebra& s = h.source;
  const Algebra& t = h.target;
  HomCheck result;

  if (!(h.apply(s.one()) == t.one())) {
    result.pass = false;
    result.violated = HomAxiom::unit;
    result.x = s.one();
    return result;
  }

  std::vector<std::pair<Elem, Elem>> pairs;
  if (exhaustive) {
    if (s.kind() != AlgebraKind::powerset || s.atom_count() > 12)
      throw AlgebraError("exhaustive homomorphism check needs a powerset "
                         "source with at most 12 atoms");
    const auto elems = all_elements(s);
    pairs.reserve(elems.size() * elems.size());
    for (const Elem& x : elems)
      for (const Elem& y : elems) pairs.emplace_back(x, y);
  } else {
    std::vector<Elem> cells;
    if (!h.total()) {
      std::vector<Elem> domain;
      for (const auto& entry : h.generator_images) domain.push_back(entry.first);
      cells = s.atomize(domain);
    }
    auto sample = [&]() {
      return h.total() ? random_elem(s, rng) : random_join_of(s, cells, rng);
    };
    for (std::size_t i = 0; i < trials; ++i) {
      Elem x = sample();
      Elem y = sample();
      pairs.emplace_back(std::move(x), std::move(y));
    }
  }

  auto fail = [&](HomAxiom axiom, const Elem& x, const Elem& y) {
    result.pass = false;
    result.violated = axiom;
    result.x = x;
    result.y = y;
  };

  for (const auto& [x, y] : pairs) {
    ++result.pairs_checked;
    const Elem hx = h.apply(x);
    const Elem hy = h.apply(y);
    if (!(h.apply(s.meet(x, y)) == t.meet(hx, hy))) {
      fail(HomAxiom::meet, x, y);
      return result;
    }
    if (!(h.apply(s.disjoint_sum(x, y)) == t.disjoint_sum(hx, hy))) {
      fail(HomAxiom::disjoint_sum, x, y);
      return result;
    }
  }
  // Join preservation is a consequence of (i)-(iii); assert it on the same
  // pairs.
  for (const auto& [x, y] : pairs) {
    if (!(h.apply(s.join(x, y)) == t.join(h.apply(x), h.apply(y)))) {
      fail(HomAxiom::join, x, y);
      return result;
    }
  }
  return result;
}

}  // namespace balg
