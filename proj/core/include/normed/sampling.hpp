#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "normed/free_algebra.hpp"
#include "normed/free_space.hpp"
#include "normed/normed_map.hpp"
#include "normed/normed_set.hpp"
#include "normed/scalar.hpp"

/// Seeded pseudo-random data for property checks and benchmarks.
namespace normed::sampling {

using Rng = std::mt19937_64;

const Rational& pick(Rng& rng, const std::vector<Rational>& palette);

/// Labels "a", "b", ... ; size uniform in [min_size, max_size].
NormedSet random_set(Rng& rng, std::size_t min_size, std::size_t max_size, const std::vector<Rational>& palette);

NormedMap random_map(Rng& rng, const NormedSet& domain, const NormedSet& codomain);

/// Numerator in [-3, 3], denominator in [1, 3]; imaginary part only if `complex`.
Scalar random_scalar(Rng& rng, bool complex = false);
Scalar random_nonzero_scalar(Rng& rng, bool complex = false);

free_space::FreeVector random_vector(Rng& rng, const NormedSet& base, std::size_t terms, bool complex = false);
std::vector<Scalar> random_coordinates(Rng& rng, std::size_t dimension, bool complex = false);

/// Up to `terms` words of length in [1, max_degree].
free_algebra::TensorElement random_tensor(Rng& rng, const NormedSet& base, std::size_t terms,
                                          std::size_t max_degree, bool complex = false);

}  // namespace normed::sampling
