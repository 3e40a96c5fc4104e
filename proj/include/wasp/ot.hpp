#pragma once

#include <cstddef>
#include <vector>

#include "wasp/measure.hpp"

namespace wasp {

/// Supported exponent range is (1, kMaxExponent].
inline constexpr double kMaxExponent = 16.0;

/// Marginal feasibility tolerance, absolute per atom.
inline constexpr double kMarginalTolerance = 1e-9;

struct CouplingEntry {
  std::size_t left;
  std::size_t right;
  double mass;

  friend bool operator==(const CouplingEntry&, const CouplingEntry&) = default;
};

/// Sparse transport plan between two discrete measures for cost d(x, y)^p.
struct Coupling {
  DiscreteMeasure left_marginal;
  DiscreteMeasure right_marginal;
  std::vector<CouplingEntry> entries;
  double p;
  /// (sum mass * d^p)^(1/p) of `entries`.
  double cost;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// Throws InvalidExponent unless 1 < p <= kMaxExponent.
void require_exponent(double p);

/// (sum_k mass_k * d(x_{left_k}, y_{right_k})^p)^(1/p).
double transport_cost(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                      const std::vector<CouplingEntry>& entries, double p);

/// Largest per-atom deviation of the coupling's row/column sums from the
/// marginal weights.
double marginal_error(const Coupling& pi);

/// Exact optimal coupling for cost d(x, y)^p; cost field is W_p(mu, nu).
///
/// Entries are ordered by (left, right). Coincident atoms are not merged.
/// Throws InvalidExponent, DimensionMismatch.
Coupling solve_ot(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p);

double wasserstein_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p);

/// Exhaustive search over the n! permutation couplings of two uniform
/// measures of equal size n <= 8. Independent oracle for solve_ot.
Coupling brute_force_ot(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p);

struct TailBoundReport {
  double radius;
  double tail_mass;  // mass on pairs with d(x, y) > radius
  double bound;      // (W_p / radius)^p
  bool pass;
};

/// Checks that an optimal coupling puts at most (W_p/R)^p mass on pairs
/// farther apart than R.
TailBoundReport tail_mass_bound_check(const Coupling& pi, double radius);

}  // namespace wasp
