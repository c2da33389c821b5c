#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "balg/algebra.hpp"
#include "balg/place_function.hpp"
#include "balg/random.hpp"
#include "balg/verdict.hpp"

namespace balg {

enum class CertificateKind { exhaustive_complete, no_supremum };

std::string to_string(CertificateKind kind);

enum class WitnessFamily { evens, diagonal };

/// u′ < u, both upper bounds of the family. `defect` is the removed index
/// (evens) or the removed point (m, m′) (diagonal).
struct ImprovementStep {
  Elem u;
  std::vector<std::uint64_t> defect;
  Elem improved;
};

/// u is not an upper bound: `missed` is a family member outside u, given by
/// its index n (even singleton fin{n}) or its point (n, n).
struct NotUpperBound {
  std::vector<std::uint64_t> missed;
};

using Improvement = std::variant<ImprovementStep, NotUpperBound>;

struct Certificate {
  CertificateKind kind = CertificateKind::exhaustive_complete;
  Algebra algebra = Algebra::trivial();
  std::string family;
  std::size_t subsets_checked = 0;
  std::optional<WitnessFamily> witness_family;
  std::vector<ImprovementStep> steps;
};

/// Every nonempty subset of a powerset algebra with at most `max_atoms` atoms
/// has a least upper bound, equal to its join. Throws AlgebraError when the
/// algebra is not a powerset or exceeds the cap, and when a subset has no
/// least upper bound.
Certificate check_finite_completeness(const Algebra& a, int max_atoms = 4);

/// One refutation step for the even singletons {fin{2k}} in the
/// finite-cofinite algebra.
Improvement improve_upper_bound_evens(const Algebra& fc, const Elem& u);

/// One refutation step for the diagonal rect(fin{n}, fin{n}) in FC⊗FC.
Improvement improve_upper_bound_diagonal(const Algebra& product, const Elem& u);

/// `steps` successive improvements from `start`. Throws AlgebraError when
/// `start` is not an upper bound of the family.
Certificate certify_evens(const Algebra& fc, const Elem& start, std::size_t steps);
Certificate certify_diagonal(const Algebra& product, const Elem& start,
                             std::size_t steps);

/// Re-checks each no_supremum step from the element data alone: u′ ≤ u, some
/// family-relevant point of u is missing from u′, and u′ contains the whole
/// family. Exhaustive certificates are re-derived by brute force.
Verdict validate_certificate(const Certificate& c);

/// Bounded suprema in C(A) for a finite powerset A: the join of a finite
/// family is an upper bound whose value on every atom is attained by some
/// member, so it lies below every upper bound. Families are every nonempty
/// subset of size at most `max_family` of the place functions with values in
/// {-1, 0, 1} on the atoms.
Verdict check_bounded_suprema_exhaustive(const PlaceSpace& space,
                                         std::size_t max_family);

/// The same argument on `trials` random bounded families of the atom model
/// Q^dim.
Verdict check_bounded_suprema_sampled(std::size_t dim, std::size_t trials, Rng& rng);

}  // namespace balg
