#pragma once

// Point-membership oracles. They read element encodings directly and never
// call Algebra operations, so they can judge the library's results.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "balg/atom_model.hpp"
#include "balg/elem.hpp"
#include "balg/place_function.hpp"
#include "balg/rational.hpp"

namespace oracle {

// Atom index for powersets (0-based), natural number for finite-cofinite.
inline bool member(const balg::Elem& x, std::uint64_t point) {
  if (const auto* s = x.atom_set()) return point < s->width && ((s->bits >> point) & 1u);
  const auto* i = x.index_set();
  const bool listed = std::binary_search(i->support.begin(), i->support.end(), point);
  return i->cofinite != listed;
}

inline bool member(const balg::Elem& x, std::uint64_t p, std::uint64_t q) {
  const balg::RectForm& g = *x.rect_form();
  for (std::size_t r = 0; r < g.left_cells.size(); ++r) {
    if (!member(g.left_cells[r], p)) continue;
    for (std::size_t c = 0; c < g.right_cells.size(); ++c)
      if (member(g.right_cells[c], q)) return g.at(r, c);
  }
  return false;
}

// Bit p·m + q set when atom pair (p, q) lies below x in P(n)⊗P(m).
inline std::uint64_t pair_mask(const balg::Elem& x, int n, int m) {
  std::uint64_t mask = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < m; ++q)
      if (member(x, p, q)) mask |= std::uint64_t{1} << (p * m + q);
  return mask;
}

inline balg::Rational value(const balg::PlaceFunction& f, std::uint64_t point) {
  balg::Rational v = 0;
  for (const balg::Term& t : f.terms())
    if (member(t.support, point)) v += t.coeff;
  return v;
}

inline balg::Rational value(const balg::PlaceFunction& f, std::uint64_t p, std::uint64_t q) {
  balg::Rational v = 0;
  for (const balg::Term& t : f.terms())
    if (member(t.support, p, q)) v += t.coeff;
  return v;
}

inline std::vector<balg::Rational> values(const balg::PlaceFunction& f, std::uint64_t points) {
  std::vector<balg::Rational> out;
  for (std::uint64_t p = 0; p < points; ++p) out.push_back(value(f, p));
  return out;
}

}  // namespace oracle
