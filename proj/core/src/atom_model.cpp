#include "balg/atom_model.hpp"

#include <algorithm>
#include <sstream>

#include "balg/expr.hpp"

namespace balg {

// ---------------------------------------------------------------- AtomSpace

void AtomSpace::check(const AtomVector& a) const {
  if (a.dim() != dim_)
    throw AlgebraError("vector of dimension " + std::to_string(a.dim()) +
                       " used in a space of dimension " + std::to_string(dim_));
}

AtomVector AtomSpace::basis(std::size_t i) const {
  AtomVector v = zero();
  v.values.at(i) = 1;
  return v;
}

AtomVector AtomSpace::add(const AtomVector& a, const AtomVector& b) const {
  check(a);
  check(b);
  AtomVector out = a;
  for (std::size_t i = 0; i < dim_; ++i) out.values[i] += b.values[i];
  return out;
}

AtomVector AtomSpace::sub(const AtomVector& a, const AtomVector& b) const {
  return add(a, scale(-1, b));
}

AtomVector AtomSpace::scale(const Rational& c, const AtomVector& a) const {
  check(a);
  AtomVector out = a;
  for (auto& x : out.values) x *= c;
  return out;
}

AtomVector AtomSpace::meet(const AtomVector& a, const AtomVector& b) const {
  check(a);
  check(b);
  AtomVector out = a;
  for (std::size_t i = 0; i < dim_; ++i)
    if (b.values[i] < out.values[i]) out.values[i] = b.values[i];
  return out;
}

AtomVector AtomSpace::join(const AtomVector& a, const AtomVector& b) const {
  check(a);
  check(b);
  AtomVector out = a;
  for (std::size_t i = 0; i < dim_; ++i)
    if (out.values[i] < b.values[i]) out.values[i] = b.values[i];
  return out;
}

AtomVector AtomSpace::abs(const AtomVector& a) const {
  check(a);
  AtomVector out = a;
  for (auto& x : out.values)
    if (x < 0) x = -x;
  return out;
}

bool AtomSpace::is_zero(const AtomVector& a) const {
  check(a);
  return std::all_of(a.values.begin(), a.values.end(),
                     [](const Rational& x) { return x == 0; });
}

bool AtomSpace::is_positive(const AtomVector& a) const {
  check(a);
  return std::all_of(a.values.begin(), a.values.end(),
                     [](const Rational& x) { return x >= 0; });
}

bool AtomSpace::leq(const AtomVector& a, const AtomVector& b) const {
  return is_positive(sub(b, a));
}

AtomVector AtomSpace::random(Rng& rng) const {
  AtomVector v = zero();
  std::bernoulli_distribution sparse(0.25);
  for (auto& x : v.values) x = sparse(rng) ? Rational(0) : random_rational(rng);
  return v;
}

AtomVector AtomSpace::random_positive(Rng& rng) const { return abs(random(rng)); }

std::pair<AtomVector, AtomVector> AtomSpace::random_disjoint_pair(Rng& rng) const {
  AtomVector f = random_positive(rng);
  AtomVector g = random_positive(rng);
  std::bernoulli_distribution side(0.5);
  for (std::size_t i = 0; i < dim_; ++i) (side(rng) ? f : g).values[i] = 0;
  return {f, g};
}

std::string AtomSpace::format(const AtomVector& a) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.dim(); ++i)
    os << (i ? "," : "") << to_string(a.values[i]);
  os << ')';
  return os.str();
}

// --------------------------------------------------------- model conversion

namespace {

void require_finite_powerset(const Algebra& a) {
  if (a.kind() != AlgebraKind::powerset || a.is_trivial())
    throw AlgebraError("the atom model needs a nontrivial powerset backend, got " +
                       a.describe());
}

}  // namespace

AtomVector to_atom_model(const PlaceSpace& space, const PlaceFunction& f) {
  const Algebra& a = space.algebra();
  require_finite_powerset(a);
  space.require(f);
  AtomVector v{std::vector<Rational>(static_cast<std::size_t>(a.atom_count()))};
  const auto atoms = a.atoms();
  for (std::size_t p = 0; p < atoms.size(); ++p)
    v.values[p] = space.value_at(f, atoms[p]);
  return v;
}

PlaceFunction from_atom_model(const PlaceSpace& space, const AtomVector& v) {
  const Algebra& a = space.algebra();
  require_finite_powerset(a);
  const auto atoms = a.atoms();
  if (v.dim() != atoms.size())
    throw AlgebraError("atom vector dimension does not match the algebra");
  std::vector<Term> raw;
  for (std::size_t p = 0; p < atoms.size(); ++p)
    raw.push_back(Term{v.values[p], atoms[p]});
  return space.canonicalize(raw);
}

AtomVector pure_tensor(const AtomVector& e, const AtomVector& f) {
  AtomVector out{std::vector<Rational>(e.dim() * f.dim())};
  for (std::size_t p = 0; p < e.dim(); ++p)
    for (std::size_t q = 0; q < f.dim(); ++q)
      out.values[p * f.dim() + q] = e.values[p] * f.values[q];
  return out;
}

// ---------------------------------------------------------------------- psi

PsiMap::PsiMap(Algebra left, Algebra right)
    : left_(left), right_(right), product_(Algebra::free_product(left, right)) {}

namespace {

bool pairwise_disjoint(const Algebra& a, std::span<const Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (!a.is_zero(a.meet(terms[i].support, terms[j].support))) return false;
  return true;
}

}  // namespace

PlaceFunction PsiMap::on_terms(std::span<const Term> f,
                               std::span<const Term> g) const {
  const Algebra& ab = product_.algebra();
  for (const Term& x : f) left_.algebra().require(x.support);
  for (const Term& u : g) right_.algebra().require(u.support);
  // Rectangles over disjoint factor terms are disjoint, so no refinement.
  if (pairwise_disjoint(left_.algebra(), f) && pairwise_disjoint(right_.algebra(), g)) {
    std::vector<std::pair<Elem, Rational>> cells;
    for (const Term& x : f)
      for (const Term& u : g)
        cells.emplace_back(rectangle(ab, x.support, u.support), x.coeff * u.coeff);
    return product_.assemble(std::move(cells));
  }
  std::vector<Term> raw;
  for (const Term& x : f)
    for (const Term& u : g)
      raw.push_back(Term{x.coeff * u.coeff, rectangle(ab, x.support, u.support)});
  return product_.canonicalize(raw);
}

PlaceFunction PsiMap::operator()(const PlaceFunction& f,
                                 const PlaceFunction& g) const {
  left_.require(f);
  right_.require(g);
  return on_terms(f.terms(), g.terms());
}

// ------------------------------------------------------- linear lattice maps

LinearLatticeMap LinearLatticeMap::identity(std::size_t n) {
  LinearLatticeMap m{n, n, std::vector<Rational>(n * n)};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

AtomVector LinearLatticeMap::apply(const AtomVector& v) const {
  if (v.dim() != cols)
    throw AlgebraError("vector dimension does not match the map's source");
  AtomVector out{std::vector<Rational>(rows)};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (at(r, c) != 0) out.values[r] += at(r, c) * v.values[c];
  return out;
}

bool LinearLatticeMap::is_routed() const {
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (at(r, c) < 0) return false;
      if (at(r, c) != 0) ++nonzero;
    }
    if (nonzero > 1) return false;
  }
  return true;
}

std::size_t rational_rank(const LinearLatticeMap& m) {
  std::vector<Rational> a = m.entries;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot * m.cols + c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t k = 0; k < m.cols; ++k)
      std::swap(a[pivot * m.cols + k], a[rank * m.cols + k]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r * m.cols + c] == 0) continue;
      const Rational factor = a[r * m.cols + c] / a[rank * m.cols + c];
      for (std::size_t k = c; k < m.cols; ++k)
        a[r * m.cols + k] -= factor * a[rank * m.cols + k];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Solves L·P = Y for L, with P square and invertible. Returns false when P is
// singular.
bool solve_right(const LinearLatticeMap& y, const LinearLatticeMap& p,
                 LinearLatticeMap& l) {
  // Transposed system Pᵀ Lᵀ = Yᵀ, eliminated on the augmented [Pᵀ | Yᵀ].
  const std::size_t n = p.rows;
  const std::size_t k = y.rows;
  const std::size_t w = n + k;
  std::vector<Rational> aug(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = p.at(j, i);
    for (std::size_t j = 0; j < k; ++j) aug[i * w + n + j] = y.at(j, i);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug[pivot * w + c] == 0) ++pivot;
    if (pivot == n) return false;
    for (std::size_t j = 0; j < w; ++j) std::swap(aug[pivot * w + j], aug[c * w + j]);
    const Rational lead = aug[c * w + c];
    for (std::size_t j = 0; j < w; ++j) aug[c * w + j] /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r * w + c] == 0) continue;
      const Rational factor = aug[r * w + c];
      for (std::size_t j = 0; j < w; ++j) aug[r * w + j] -= factor * aug[c * w + j];
    }
  }
  l = LinearLatticeMap{k, n, std::vector<Rational>(k * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) l.at(j, i) = aug[i * w + n + j];
  return true;
}

}  // namespace

// ------------------------------------------------------------------------ T

TensorMap::TensorMap(Algebra left, Algebra right)
    : psi_((require_finite_powerset(left), require_finite_powerset(right), left),
           right),
      n_(static_cast<std::size_t>(left.atom_count())),
      m_(static_cast<std::size_t>(right.atom_count())),
      source_(n_ * m_) {
  const Algebra& ab = psi_.product().algebra();
  const auto left_atoms = left.atoms();
  const auto right_atoms = right.atoms();
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < m_; ++q)
      product_atoms_.push_back(rectangle(ab, left_atoms[p], right_atoms[q]));

  matrix_ = LinearLatticeMap{n_ * m_, n_ * m_,
                             std::vector<Rational>(n_ * m_ * n_ * m_)};
  for (std::size_t c = 0; c < n_ * m_; ++c) {
    const AtomVector col = coordinates(apply(source_.basis(c)));
    for (std::size_t r = 0; r < n_ * m_; ++r) matrix_.at(r, c) = col.values[r];
  }
}

PlaceFunction TensorMap::apply(const AtomVector& v) const {
  if (v.dim() != n_ * m_)
    throw AlgebraError("T applied to a vector of the wrong dimension");
  std::vector<Term> raw;
  for (std::size_t c = 0; c < v.dim(); ++c)
    raw.push_back(Term{v.values[c], product_atoms_[c]});
  return psi_.product().canonicalize(raw);
}

AtomVector TensorMap::coordinates(const PlaceFunction& h) const {
  psi_.product().require(h);
  AtomVector out{std::vector<Rational>(product_atoms_.size())};
  for (std::size_t r = 0; r < product_atoms_.size(); ++r)
    out.values[r] = psi_.product().value_at(h, product_atoms_[r]);
  return out;
}

AtomVector TensorMap::tensor_of(const PlaceFunction& f,
                                const PlaceFunction& g) const {
  return pure_tensor(to_atom_model(psi_.left(), f), to_atom_model(psi_.right(), g));
}

TensorMap build_T(const Algebra& left, const Algebra& right) {
  return TensorMap(left, right);
}

// ------------------------------------------------------ universal property

UniversalPropertyResult verify_universal_property(const AtomBimorphism& psi_prime,
                                                  std::size_t n, std::size_t m,
                                                  std::size_t k,
                                                  std::size_t trials, Rng& rng) {
  UniversalPropertyResult result;
  Verdict& v = result.verdict;
  const AtomSpace left(n), right(m), target(k), source(n * m);

  LinearLatticeMap& t = result.induced;
  t = LinearLatticeMap{k, n * m, std::vector<Rational>(k * n * m)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      const AtomVector col = psi_prime(left.basis(p), right.basis(q));
      if (col.dim() != k)
        throw AlgebraError("bimorphism image has the wrong dimension");
      for (std::size_t r = 0; r < k; ++r) t.at(r, p * m + q) = col.values[r];
    }
  }

  for (std::size_t i = 0; i < trials; ++i) {
    const AtomVector f = left.random(rng), g = right.random(rng);
    ++v.checks;
    if (!(t.apply(pure_tensor(f, g)) == psi_prime(f, g))) {
      v.fail({"T'∘⊗ differs from psi'", {{"f", left.format(f)}, {"g", right.format(g)}}});
      return result;
    }
    const AtomVector w = source.random(rng);
    ++v.checks;
    if (!(target.abs(t.apply(w)) == t.apply(source.abs(w)))) {
      v.fail({"T' does not preserve |.|", {{"v", source.format(w)}}});
      return result;
    }
  }
  ++v.checks;
  if (!t.is_routed()) {
    v.fail({"T' is not of Riesz-homomorphism shape", {}});
    return result;
  }

  // Uniqueness, algebraically: a linear map agreeing with psi' on a basis of
  // pure tensors is forced to be T'.
  {
    LinearLatticeMap p{n * m, 0, {}};
    LinearLatticeMap y{k, 0, {}};
    std::vector<AtomVector> ps, ys;
    for (std::size_t attempt = 0; attempt < 50 * n * m && ps.size() < n * m; ++attempt) {
      const AtomVector f = left.random(rng), g = right.random(rng);
      ps.push_back(pure_tensor(f, g));
      LinearLatticeMap probe{n * m, ps.size(), std::vector<Rational>(n * m * ps.size())};
      for (std::size_t c = 0; c < ps.size(); ++c)
        for (std::size_t r = 0; r < n * m; ++r) probe.at(r, c) = ps[c].values[r];
      if (rational_rank(probe) < ps.size()) {
        ps.pop_back();
        continue;
      }
      ys.push_back(psi_prime(f, g));
    }
    if (ps.size() < n * m) {
      v.fail({"random pure tensors did not span the tensor space", {}});
      return result;
    }
    p = LinearLatticeMap{n * m, n * m, std::vector<Rational>(n * m * n * m)};
    y = LinearLatticeMap{k, n * m, std::vector<Rational>(k * n * m)};
    for (std::size_t c = 0; c < n * m; ++c) {
      for (std::size_t r = 0; r < n * m; ++r) p.at(r, c) = ps[c].values[r];
      for (std::size_t r = 0; r < k; ++r) y.at(r, c) = ys[c].values[r];
    }
    LinearLatticeMap solved;
    ++v.checks;
    if (!solve_right(y, p, solved) || !(solved == t)) {
      v.fail({"map solved from pure tensors differs from T'", {}});
      return result;
    }
  }

  // Uniqueness among sampled Riesz homomorphisms of routed shape.
  std::vector<LinearLatticeMap> candidates{t};
  std::uniform_int_distribution<std::size_t> pick_target(0, k);
  const Rational weights[] = {Rational(1), Rational(2), Rational(1, 2)};
  std::uniform_int_distribution<std::size_t> pick_weight(0, 2);
  for (std::size_t i = 0; i < trials; ++i) {
    LinearLatticeMap c = t;
    if (i % 2 == 0) {
      // Reroute one column of T'.
      std::uniform_int_distribution<std::size_t> col(0, n * m - 1);
      const std::size_t j = col(rng), r = pick_target(rng);
      for (std::size_t row = 0; row < k; ++row) c.at(row, j) = 0;
      if (r < k) c.at(r, j) = weights[pick_weight(rng)];
    } else {
      for (auto& e : c.entries) e = 0;
      for (std::size_t j = 0; j < n * m; ++j) {
        const std::size_t r = pick_target(rng);
        if (r < k) c.at(r, j) = weights[pick_weight(rng)];
      }
    }
    candidates.push_back(std::move(c));
  }
  std::size_t agreeing = 0;
  for (const LinearLatticeMap& c : candidates) {
    bool agrees = true;
    for (std::size_t p = 0; p < n && agrees; ++p)
      for (std::size_t q = 0; q < m && agrees; ++q)
        agrees = c.apply(pure_tensor(left.basis(p), right.basis(q))) ==
                 psi_prime(left.basis(p), right.basis(q));
    for (std::size_t s = 0; s < 4 && agrees; ++s) {
      const AtomVector f = left.random(rng), g = right.random(rng);
      agrees = c.apply(pure_tensor(f, g)) == psi_prime(f, g);
    }
    if (!agrees) continue;
    ++agreeing;
    for (std::size_t s = 0; s < 8; ++s) {
      const AtomVector w = source.random(rng);
      ++v.checks;
      if (!(c.apply(w) == t.apply(w))) {
        v.fail({"a second homomorphism agrees on pure tensors but not everywhere",
                {{"v", source.format(w)}}});
        return result;
      }
    }
  }
  v.note({"uniqueness sample",
          {{"candidates", std::to_string(candidates.size())},
           {"agreeing_on_pure_tensors", std::to_string(agreeing)}}});
  return result;
}

// --------------------------------------------------------- onto and one-to-one

std::vector<PureTensorTerm> onto_preimage(const TensorMap& t,
                                          const PlaceFunction& h) {
  const PlaceSpace& ab = t.psi().product();
  ab.require(h);
  std::vector<PureTensorTerm> out;
  for (const Term& term : h.terms())
    for (const Rectangle& r : decompose_disjoint(ab.algebra(), term.support))
      out.push_back(PureTensorTerm{term.coeff, r.left, r.right});
  return out;
}

namespace {

std::string format_preimage(const TensorMap& t,
                            const std::vector<PureTensorTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const PureTensorTerm& term : terms) {
    if (!out.empty()) out += " + ";
    out += to_string(term.coeff) + "*chi(" +
           format_elem(t.psi().left().algebra(), term.left) + ")(x)chi(" +
           format_elem(t.psi().right().algebra(), term.right) + ")";
  }
  return out;
}

}  // namespace

Verdict verify_T_onto_and_injective(const TensorMap& t,
                                    std::span<const PlaceFunction> extra) {
  Verdict v;
  const PlaceSpace& ab = t.psi().product();
  std::vector<PlaceFunction> spanning;
  for (const Elem& atom : t.product_atoms()) spanning.push_back(ab.chi(atom));
  spanning.push_back(ab.unit());
  spanning.insert(spanning.end(), extra.begin(), extra.end());

  for (std::size_t i = 0; i < spanning.size(); ++i) {
    const PlaceFunction& h = spanning[i];
    const auto terms = onto_preimage(t, h);
    AtomVector pre = t.source().zero();
    for (const PureTensorTerm& term : terms) {
      const AtomVector a = to_atom_model(t.psi().left(), t.psi().left().chi(term.left));
      const AtomVector b = to_atom_model(t.psi().right(), t.psi().right().chi(term.right));
      pre = t.source().add(pre, t.source().scale(term.coeff, pure_tensor(a, b)));
    }
    ++v.checks;
    if (!(t.apply(pre) == h)) {
      v.fail({"onto preimage does not map back",
              {{"h", ab.format(h)}, {"preimage", format_preimage(t, terms)}}});
      return v;
    }
    if (i >= t.product_atoms().size())
      v.note({"onto preimage",
              {{"h", ab.format(h)},
               {"preimage", format_preimage(t, terms)},
               {"pure_tensor_terms", std::to_string(terms.size())},
               {"coordinates", t.source().format(pre)}}});
  }

  const std::size_t rank = rational_rank(t.matrix());
  ++v.checks;
  const std::size_t full = t.left_dim() * t.right_dim();
  if (rank != full) {
    v.fail({"T is not injective",
            {{"rank", std::to_string(rank)}, {"dimension", std::to_string(full)}}});
    return v;
  }
  v.note({"injective", {{"rank", std::to_string(rank)}}});
  return v;
}

}  // namespace balg
