#include "wasp/random.hpp"

#include <cmath>
#include <vector>

namespace wasp {

namespace {

// std::uniform_real_distribution is implementation-defined; this mapping is
// not, which keeps seeded reports identical across standard libraries.
double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace

Point random_point(Rng& rng, std::size_t dim, double lo, double hi) {
  std::vector<double> c(dim);
  for (double& x : c) x = uniform(rng, lo, hi);
  return Point(std::move(c));
}

DiscreteMeasure random_uniform_measure(Rng& rng, std::size_t n, std::size_t dim, double lo, double hi) {
  std::vector<Point> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(random_point(rng, dim, lo, hi));
  return DiscreteMeasure::uniform(std::move(atoms));
}

DiscreteMeasure random_measure(Rng& rng, std::size_t n, std::size_t dim, double lo, double hi) {
  std::vector<Point> atoms;
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    atoms.push_back(random_point(rng, dim, lo, hi));
    weights.push_back(uniform(rng, 0.1, 1.0));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

Point random_unit_vector(Rng& rng, std::size_t dim) {
  while (true) {
    const Point v = random_point(rng, dim, -1.0, 1.0);
    const double r = norm(v);
    if (r > 0.1 && r <= 1.0) return (1.0 / r) * v;
  }
}

}  // namespace wasp
