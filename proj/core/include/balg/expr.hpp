#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/place_function.hpp"

namespace balg {

// Text grammar shared by the CLI, configuration and reports.
//
//   algebra   := factor ('*' factor)*            e.g. P3, FC, trivial, P2*P3
//   factor    := 'P' n | 'FC' | 'trivial' | '(' algebra ')'
//
//   element   := xor ('|' xor)*                  join
//   xor       := and ('(+)' and)*                disjoint sum
//   and       := unary ('&' unary)*              meet
//   unary     := '!' unary | primary             complement
//   primary   := '0' | '1' | '{' atoms '}'       powerset atoms, 1-based
//              | 'fin{' ns '}' | 'cof{' ns '}'   finite-cofinite, 0-based
//              | 'rect(' element ',' element ')' free-product rectangle
//              | '(' element ')'
//
//   place     := '0' | signed_term (('+'|'-') term)*
//   term      := [p['/'q] '*'] 'chi(' element ')'

/// Throws ParseError on malformed text, AlgebraError on invalid sizes.
Algebra parse_algebra(std::string_view spec);

/// Evaluates an element expression to its canonical Elem. Throws ParseError
/// on malformed text and AlgebraError when a literal does not belong to `a`.
Elem evaluate(const Algebra& a, std::string_view expr);

/// Canonical text; evaluate(a, format_elem(a, x)) == x. Free-product
/// elements are written as the join of their disjoint decomposition.
std::string format_elem(const Algebra& a, const Elem& x);

/// Grid of a free-product element with cells in element syntax.
struct GridText {
  std::vector<std::string> left_cells;
  std::vector<std::string> right_cells;
  std::vector<std::vector<int>> matrix;
};

GridText grid_text(const Algebra& product, const Elem& x);

PlaceFunction parse_place_function(const PlaceSpace& space,
                                   std::string_view text);
std::string format_place_function(const PlaceSpace& space,
                                  const PlaceFunction& f);

}  // namespace balg
