#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "balg/algebra.hpp"

namespace balg {

/// A map between two backends, described in one of three ways (checked in
/// this order when evaluating):
///
///  - `atom_map` (powerset to powerset): target atom q is sent to source atom
///    atom_map[q]; x is mapped to {q : atom_map[q] ∈ x}. Always a Boolean
///    homomorphism.
///  - `rule`: an in-process evaluation rule, used for canonical maps and for
///    deliberately broken fixtures.
///  - `generator_images`: exact table lookups, and for other elements the
///    extension through the atoms of the subalgebra generated by the table's
///    domain. Elements outside that subalgebra are rejected.
struct HomSpec {
  Algebra source;
  Algebra target;
  std::vector<std::pair<Elem, Elem>> generator_images;
  std::optional<std::vector<int>> atom_map;
  std::function<Elem(const Elem&)> rule;

  static HomSpec identity(const Algebra& a);
  static HomSpec from_atom_map(const Algebra& source, const Algebra& target,
                               std::vector<int> atom_map);
  static HomSpec from_table(const Algebra& source, const Algebra& target,
                            std::vector<std::pair<Elem, Elem>> images);
  static HomSpec from_rule(const Algebra& source, const Algebra& target,
                           std::function<Elem(const Elem&)> rule);

  /// Throws AlgebraError on malformed descriptions.
  void validate() const;
  Elem apply(const Elem& x) const;
  /// Elements the map is known to be defined on when sampling: the whole
  /// source, unless the map is given only by a generator table.
  bool total() const { return atom_map.has_value() || static_cast<bool>(rule); }
};

enum class HomAxiom { meet, disjoint_sum, unit, join };

std::string to_string(HomAxiom axiom);

struct HomCheck {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::optional<HomAxiom> violated;
  std::optional<Elem> x;
  std::optional<Elem> y;
};

/// Checks h(x∧y) = h(x)∧h(y), h(x⊕y) = h(x)⊕h(y) and h(1) = 1, pair by pair,
/// and on success that joins are preserved on the same pairs. Exhaustive mode
/// enumerates every pair of source elements and requires a powerset source
/// with at most 12 atoms; otherwise `trials` random pairs are drawn.
HomCheck check_homomorphism(const HomSpec& h, bool exhaustive,
                            std::size_t trials, std::mt19937_64& rng);

/// Every element of a powerset algebra (index order of the bit pattern).
std::vector<Elem> all_elements(const Algebra& a);

}  // namespace balg
