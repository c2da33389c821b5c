// Independent re-check of certificates. Works from the stored element data
// and point membership only.
#include <algorithm>

#include "balg/certificate.hpp"
#include "balg/errors.hpp"
#include "balg/expr.hpp"
#include "balg/homomorphism.hpp"

namespace balg {
namespace {

bool member(const IndexSet& s, std::uint64_t n) {
  const bool listed = std::find(s.support.begin(), s.support.end(), n) != s.support.end();
  return s.cofinite != listed;
}

bool member(const RectForm& g, std::uint64_t i, std::uint64_t j) {
  for (std::size_t r = 0; r < g.left_cells.size(); ++r) {
    if (!member(*g.left_cells[r].index_set(), i)) continue;
    for (std::size_t c = 0; c < g.right_cells.size(); ++c)
      if (member(*g.right_cells[c].index_set(), j)) return g.at(r, c);
  }
  return false;
}

std::uint64_t support_bound(const IndexSet& s) {
  return s.support.empty() ? 0 : s.support.back() + 1;
}

std::uint64_t support_bound(const RectForm& g) {
  std::uint64_t b = 0;
  for (const auto* cells : {&g.left_cells, &g.right_cells})
    for (const Elem& c : *cells) b = std::max(b, support_bound(*c.index_set()));
  return b;
}

// Every index at or beyond the bound behaves like the bound itself.
bool evens_upper_bound(const IndexSet& u) {
  const std::uint64_t b = support_bound(u) + 2;
  for (std::uint64_t n = 0; n <= b; n += 2)
    if (!member(u, n)) return false;
  return true;
}

bool diagonal_upper_bound(const RectForm& u) {
  const std::uint64_t b = support_bound(u) + 1;
  for (std::uint64_t n = 0; n <= b; ++n)
    if (!member(u, n, n)) return false;
  return true;
}

Witness step_witness(const Certificate& c, std::size_t i, const std::string& why) {
  return {"certificate step rejected",
          {{"step", std::to_string(i)},
           {"u", format_elem(c.algebra, c.steps[i].u)},
           {"u_prime", format_elem(c.algebra, c.steps[i].improved)},
           {"reason", why}}};
}

void validate_evens(const Certificate& c, Verdict& v) {
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const IndexSet* u = c.steps[i].u.index_set();
    const IndexSet* w = c.steps[i].improved.index_set();
    if (!u || !w) throw AlgebraError("evens certificate holds non-FC elements");
    const std::uint64_t b = std::max(support_bound(*u), support_bound(*w)) + 1;
    bool subset = true, strict = false;
    for (std::uint64_t n = 0; n <= b; ++n) {
      if (member(*w, n) && !member(*u, n)) subset = false;
      if (member(*u, n) && !member(*w, n)) strict = true;
    }
    ++v.checks;
    if (!subset || !strict) return v.fail(step_witness(c, i, "not strictly below u"));
    ++v.checks;
    if (!evens_upper_bound(*u) || !evens_upper_bound(*w))
      return v.fail(step_witness(c, i, "not an upper bound of the even singletons"));
    if (i + 1 < c.steps.size() && !(c.steps[i + 1].u == c.steps[i].improved))
      return v.fail(step_witness(c, i, "chain is broken"));
  }
}

void validate_diagonal(const Certificate& c, Verdict& v) {
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const RectForm* u = c.steps[i].u.rect_form();
    const RectForm* w = c.steps[i].improved.rect_form();
    if (!u || !w) throw AlgebraError("diagonal certificate holds non-product elements");
    const std::uint64_t b = std::max(support_bound(*u), support_bound(*w)) + 1;
    bool subset = true, strict = false;
    for (std::uint64_t x = 0; x <= b; ++x) {
      for (std::uint64_t y = 0; y <= b; ++y) {
        const bool in_u = member(*u, x, y), in_w = member(*w, x, y);
        if (in_w && !in_u) subset = false;
        if (in_u && !in_w) strict = true;
      }
    }
    ++v.checks;
    if (!subset || !strict) return v.fail(step_witness(c, i, "not strictly below u"));
    ++v.checks;
    if (!diagonal_upper_bound(*u) || !diagonal_upper_bound(*w))
      return v.fail(step_witness(c, i, "not an upper bound of the diagonal"));
    if (i + 1 < c.steps.size() && !(c.steps[i + 1].u == c.steps[i].improved))
      return v.fail(step_witness(c, i, "chain is broken"));
  }
}

void validate_exhaustive(const Certificate& c, Verdict& v) {
  const Algebra& a = c.algebra;
  const std::size_t n = static_cast<std::size_t>(a.atom_count());
  const std::size_t k = std::size_t{1} << n;
  const std::uint64_t expected = (std::uint64_t{1} << k) - 1;
  ++v.checks;
  if (c.subsets_checked != expected) {
    v.fail({"subset count mismatch",
            {{"recorded", std::to_string(c.subsets_checked)},
             {"expected", std::to_string(expected)}}});
    return;
  }
  // Brute force over bit patterns: the union of a family is below every set
  // containing all members.
  for (std::uint64_t s = 1; s <= expected; ++s) {
    std::uint32_t uni = 0;
    for (std::uint32_t x = 0; x < k; ++x)
      if (s >> x & 1) uni |= x;
    for (std::uint32_t u = 0; u < k; ++u) {
      bool upper = true;
      for (std::uint32_t x = 0; x < k && upper; ++x)
        if ((s >> x & 1) && (x & ~u)) upper = false;
      if (upper && (uni & ~u)) {
        v.fail({"union is not least", {{"subset_mask", std::to_string(s)}}});
        return;
      }
    }
  }
  ++v.checks;
}

}  // namespace

Verdict validate_certificate(const Certificate& c) {
  Verdict v;
  if (c.kind == CertificateKind::exhaustive_complete) {
    validate_exhaustive(c, v);
    return v;
  }
  if (!c.witness_family) throw AlgebraError("no_supremum certificate without a family");
  if (*c.witness_family == WitnessFamily::evens)
    validate_evens(c, v);
  else
    validate_diagonal(c, v);
  return v;
}

}  // namespace balg
