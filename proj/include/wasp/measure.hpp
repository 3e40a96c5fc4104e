#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wasp/point.hpp"

namespace wasp {

/// Tolerance on |sum of weights - 1| accepted by DiscreteMeasure.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Grid used to decide that two atom positions coincide.
inline constexpr double kPositionKeyTolerance = 1e-12;

/// Finitely supported probability measure on R^d.
///
/// Zero-weight atoms are pruned on construction, so the atom list is exactly
/// the support. Coincident atoms are kept as given; use merged() to collapse
/// them.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights);

  static DiscreteMeasure dirac(Point x);
  static DiscreteMeasure uniform(std::vector<Point> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  std::size_t dim() const noexcept { return atoms_.front().dim(); }
  std::span<const Point> atoms() const noexcept { return atoms_; }
  std::span<const double> weights() const noexcept { return weights_; }
  const Point& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  /// True when every weight equals 1/size() within kWeightSumTolerance.
  bool is_uniform() const;

  DiscreteMeasure merged() const;
  DiscreteMeasure translated(const Point& shift) const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Point> atoms_;
  std::vector<double> weights_;
};

/// Pushforward of sum_i weights[i] * delta_{positions[i]}, with atoms whose
/// positions agree on the kPositionKeyTolerance grid merged into one.
/// Atoms come out ordered lexicographically by position key.
DiscreteMeasure pushforward(std::span<const Point> positions, std::span<const double> weights);

/// Position key: each coordinate snapped to the kPositionKeyTolerance grid.
std::vector<double> position_key(const Point& x);

}  // namespace wasp
