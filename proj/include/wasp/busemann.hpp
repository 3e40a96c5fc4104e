#pragma once

#include <vector>

#include "wasp/measure.hpp"
#include "wasp/path_measures.hpp"

namespace wasp {

struct BusemannOptions {
  double t0 = 1.0;
  double tol = 1e-6;
  int max_doublings = 24;
};

struct BusemannSample {
  double t;
  double value;  // W_p(nu, mu_t) - t
};

/// Truncated Busemann value on a doubling schedule.
///
/// W_p(nu, mu_t) - t is non-increasing in t and bounded below by
/// -W_p(nu, mu_0), so `value` is an upper bound on the limit and
/// [lower_bound, value] brackets it.
struct BusemannEstimate {
  double value;
  double t_final;
  double last_decrement;
  double lower_bound;
  std::vector<BusemannSample> schedule;
  /// Stopped on the decrement rule rather than by exhausting max_doublings.
  bool converged;
  /// Largest increase seen between consecutive schedule entries (0 if none).
  double max_increase;
};

/// Slack for the monotone and lower-bound invariants of a recorded schedule.
inline constexpr double kMonotoneSlack = 1e-9;

/// Increase beyond which busemann_value reports a solver defect.
inline constexpr double kMonotoneViolation = 1e-6;

/// Unit-speed tolerance |k - 1|.
inline constexpr double kUnitSpeedTolerance = 1e-9;

void require_unit_speed(const RayMeasure& ray);

/// W_p(nu, mu_t) - t.
double truncated_busemann(const RayMeasure& ray, const DiscreteMeasure& nu, double t);

/// Evaluates W_p(nu, mu_t) - t at t = t0 * 2^j, j = 0..max_doublings, and stops
/// early once the decrement falls below tol.
///
/// Throws InvalidArgument for a non-unit-speed ray and SolverError when the
/// sequence increases by more than kMonotoneViolation.
BusemannEstimate busemann_value(const RayMeasure& ray, const DiscreteMeasure& nu,
                                const BusemannOptions& options = {});

struct LipschitzReport {
  double b1;
  double b2;
  double t_eval;
  double distance;  // W_p(nu1, nu2)
  double slack;
  bool pass;
};

/// |b(nu1) - b(nu2)| <= W_p(nu1, nu2) with both values taken at a common time.
LipschitzReport lipschitz_check(const RayMeasure& ray, const DiscreteMeasure& nu1,
                                const DiscreteMeasure& nu2, double tol);

}  // namespace wasp
