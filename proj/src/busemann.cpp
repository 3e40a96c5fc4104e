#include "wasp/busemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wasp/errors.hpp"

namespace wasp {

void require_unit_speed(const RayMeasure& ray) {
  if (std::abs(ray.speed - 1.0) > kUnitSpeedTolerance) {
    throw InvalidArgument("Busemann functions need a unit-speed ray, got speed " +
                          std::to_string(ray.speed));
  }
}

double truncated_busemann(const RayMeasure& ray, const DiscreteMeasure& nu, double t) {
  return wasserstein_distance(nu, ray_section(ray, t), ray.p) - t;
}

BusemannEstimate busemann_value(const RayMeasure& ray, const DiscreteMeasure& nu,
                                const BusemannOptions& options) {
  require_unit_speed(ray);
  if (!(options.t0 > 0.0) || !std::isfinite(options.t0)) throw InvalidArgument("t0 must be positive");
  if (!(options.tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (options.max_doublings < 1) throw InvalidArgument("max_doublings must be >= 1");

  BusemannEstimate est{};
  est.lower_bound = -wasserstein_distance(nu, ray_section(ray, 0.0), ray.p);
  double t = options.t0;
  for (int j = 0; j <= options.max_doublings; ++j, t *= 2.0) {
    const double value = truncated_busemann(ray, nu, t);
    if (!est.schedule.empty()) {
      const double previous = est.schedule.back().value;
      const double increase = value - previous;
      if (increase > kMonotoneViolation) {
        throw SolverError("truncated Busemann sequence increased by " + std::to_string(increase) +
                          " at t = " + std::to_string(t));
      }
      est.max_increase = std::max(est.max_increase, increase);
      est.last_decrement = std::max(0.0, -increase);
    }
    est.schedule.push_back({t, value});
    est.value = value;
    est.t_final = t;
    if (est.schedule.size() >= 2 && est.last_decrement < options.tol) {
      est.converged = true;
      break;
    }
  }
  return est;
}

LipschitzReport lipschitz_check(const RayMeasure& ray, const DiscreteMeasure& nu1,
                                const DiscreteMeasure& nu2, double tol) {
  BusemannOptions options;
  options.tol = tol;
  const auto e1 = busemann_value(ray, nu1, options);
  const auto e2 = busemann_value(ray, nu2, options);
  const double t = std::max(e1.t_final, e2.t_final);
  const double b1 = e1.t_final == t ? e1.value : truncated_busemann(ray, nu1, t);
  const double b2 = e2.t_final == t ? e2.value : truncated_busemann(ray, nu2, t);
  const double dist = wasserstein_distance(nu1, nu2, ray.p);
  const double slack = 2.0 * (std::max(e1.last_decrement, e2.last_decrement) + kMonotoneSlack);
  return {b1, b2, t, dist, slack, std::abs(b1 - b2) <= dist + slack};
}

}  // namespace wasp
