#include "wasp/measure.hpp"

#include <cmath>
#include <map>
#include <string>

#include "wasp/errors.hpp"

namespace wasp {

DiscreteMeasure::DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights) {
  if (atoms.empty()) throw EmptyMeasure("measure has no atoms");
  if (atoms.size() != weights.size()) {
    throw InvalidArgument("measure has " + std::to_string(atoms.size()) + " atoms but " +
                          std::to_string(weights.size()) + " weights");
  }
  const std::size_t d = atoms.front().dim();
  double total = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].dim() != d) throw DimensionMismatch("measure atoms have mixed dimensions");
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw InvalidArgument("measure weights must be finite and nonnegative");
    }
    total += weights[i];
    if (weights[i] > 0.0) {
      atoms_.push_back(std::move(atoms[i]));
      weights_.push_back(weights[i]);
    }
  }
  if (atoms_.empty()) throw EmptyMeasure("measure has no atoms of positive weight");
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw InvalidArgument("measure weights sum to " + std::to_string(total) + ", expected 1");
  }
}

DiscreteMeasure DiscreteMeasure::dirac(Point x) { return DiscreteMeasure({std::move(x)}, {1.0}); }

DiscreteMeasure DiscreteMeasure::uniform(std::vector<Point> atoms) {
  if (atoms.empty()) throw EmptyMeasure("measure has no atoms");
  std::vector<double> weights(atoms.size(), 1.0 / static_cast<double>(atoms.size()));
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

bool DiscreteMeasure::is_uniform() const {
  const double w = 1.0 / static_cast<double>(size());
  for (double x : weights_) {
    if (std::abs(x - w) > kWeightSumTolerance) return false;
  }
  return true;
}

DiscreteMeasure DiscreteMeasure::merged() const { return pushforward(atoms_, weights_); }

DiscreteMeasure DiscreteMeasure::translated(const Point& shift) const {
  std::vector<Point> moved;
  moved.reserve(atoms_.size());
  for (const Point& x : atoms_) moved.push_back(x + shift);
  return DiscreteMeasure(std::move(moved), weights_);
}

std::vector<double> position_key(const Point& x) {
  std::vector<double> key(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    key[i] = std::round(x[i] / kPositionKeyTolerance) * kPositionKeyTolerance;
    if (key[i] == 0.0) key[i] = 0.0;  // fold -0.0
  }
  return key;
}

DiscreteMeasure pushforward(std::span<const Point> positions, std::span<const double> weights) {
  if (positions.size() != weights.size()) {
    throw InvalidArgument("pushforward: positions and weights differ in length");
  }
  struct Bucket {
    std::size_t first;
    double mass;
  };
  std::map<std::vector<double>, Bucket> buckets;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    auto [it, inserted] = buckets.try_emplace(position_key(positions[i]), Bucket{i, 0.0});
    it->second.mass += weights[i];
  }
  std::vector<Point> atoms;
  std::vector<double> masses;
  atoms.reserve(buckets.size());
  masses.reserve(buckets.size());
  for (const auto& [key, bucket] : buckets) {
    atoms.push_back(positions[bucket.first]);
    masses.push_back(bucket.mass);
  }
  return DiscreteMeasure(std::move(atoms), std::move(masses));
}

}  // namespace wasp
