#pragma once

#include <cstddef>
#include <random>

#include "wasp/measure.hpp"

namespace wasp {

using Rng = std::mt19937_64;

Point random_point(Rng& rng, std::size_t dim, double lo, double hi);

/// n atoms drawn uniformly from [lo, hi]^dim, equal weights.
DiscreteMeasure random_uniform_measure(Rng& rng, std::size_t n, std::size_t dim, double lo, double hi);

/// n atoms drawn uniformly from [lo, hi]^dim, weights drawn from [0.1, 1]
/// then normalized.
DiscreteMeasure random_measure(Rng& rng, std::size_t n, std::size_t dim, double lo, double hi);

/// Uniformly distributed unit vector.
Point random_unit_vector(Rng& rng, std::size_t dim);

}  // namespace wasp
