#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "balg/algebra.hpp"
#include "balg/rational.hpp"

namespace balg {

using Rng = std::mt19937_64;

/// Finite-cofinite samples draw their supports from [0, kSampleIndexRange).
inline constexpr std::uint64_t kSampleIndexRange = 10;

Elem random_elem(const Algebra& a, Rng& rng);
/// Falls back to 1 when the algebra is trivial.
Elem random_nonzero_elem(const Algebra& a, Rng& rng);
/// Random join of a subfamily of `cells`.
Elem random_join_of(const Algebra& a, std::span<const Elem> cells, Rng& rng);

/// p/q with |p| <= 9, 1 <= q <= 4; never zero when `nonzero`.
Rational random_rational(Rng& rng, bool nonzero = false);
Rational random_positive_rational(Rng& rng);

/// Seed for an independent stream keyed by `label`.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace balg
