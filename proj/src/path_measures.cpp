#include "wasp/path_measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wasp/errors.hpp"

namespace wasp {

namespace {

constexpr double kOptimalityTolerance = 1e-8;
constexpr double kGlueTolerance = 1e-9;

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("time must be finite and >= 0");
}

bool within_relative(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-14;
}

}  // namespace

RayMeasure make_ray_measure(std::vector<AmbientRay> rays, std::vector<double> weights, double p) {
  require_exponent(p);
  if (rays.empty()) throw EmptyMeasure("ray measure has no rays");
  if (rays.size() != weights.size()) throw InvalidArgument("ray measure: rays and weights differ in length");
  RayMeasure out{{}, {}, p, 0.0};
  const std::size_t d = rays.front().origin.dim();
  double total = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].origin.dim() != d || rays[i].velocity.dim() != d) {
      throw DimensionMismatch("ray measure: rays have mixed dimensions");
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw InvalidArgument("ray measure weights must be finite and nonnegative");
    }
    total += weights[i];
    if (weights[i] == 0.0) continue;
    moment += weights[i] * std::pow(rays[i].speed(), p);
    out.rays.push_back(std::move(rays[i]));
    out.weights.push_back(weights[i]);
  }
  if (out.rays.empty()) throw EmptyMeasure("ray measure has no rays of positive weight");
  if (std::abs(total - 1.0) > kWeightSumTolerance) throw InvalidArgument("ray measure weights must sum to 1");
  out.speed = std::pow(moment, 1.0 / p);
  return out;
}

RayMeasure make_dirac_ray(const Point& origin, const Point& velocity, double p) {
  require_same_dim(origin, velocity);
  if (!(norm(velocity) > 0.0)) throw InvalidArgument("ray velocity must be nonzero");
  return make_ray_measure({AmbientRay{origin, velocity}}, {1.0}, p);
}

RayMeasure make_translation_ray(const DiscreteMeasure& mu0, const Point& velocity, double p) {
  if (mu0.dim() != velocity.dim()) throw DimensionMismatch("translation velocity has wrong dimension");
  if (!(norm(velocity) > 0.0)) throw InvalidArgument("ray velocity must be nonzero");
  std::vector<AmbientRay> rays;
  rays.reserve(mu0.size());
  for (const Point& x : mu0.atoms()) rays.push_back({x, velocity});
  return make_ray_measure(std::move(rays), {mu0.weights().begin(), mu0.weights().end()}, p);
}

GeodesicLift lift_geodesic(const Coupling& pi) {
  const double recomputed = transport_cost(pi.left_marginal, pi.right_marginal, pi.entries, pi.p);
  if (!within_relative(recomputed, pi.cost, 1e-10)) {
    throw InvalidArgument("coupling cost field does not match its entries");
  }
  const double optimal = wasserstein_distance(pi.left_marginal, pi.right_marginal, pi.p);
  if (!within_relative(pi.cost, optimal, kOptimalityTolerance)) {
    throw NotOptimal("coupling is not optimal: cost " + std::to_string(pi.cost) + " vs " +
                     std::to_string(optimal));
  }
  GeodesicLift lift{{}, {}, pi.cost, pi.p};
  lift.segments.reserve(pi.entries.size());
  lift.weights.reserve(pi.entries.size());
  for (const auto& e : pi.entries) {
    lift.segments.push_back({pi.left_marginal.atom(e.left), pi.right_marginal.atom(e.right)});
    lift.weights.push_back(e.mass);
  }
  return lift;
}

DiscreteMeasure section(const GeodesicLift& lift, double t) {
  require_time(t);
  std::vector<Point> positions;
  positions.reserve(lift.segments.size());
  const bool at_end = t >= lift.length;
  const double fraction = at_end ? 1.0 : t / lift.length;
  for (const Segment& s : lift.segments) {
    if (lift.length == 0.0 || t == 0.0) {
      positions.push_back(s.start);
    } else if (at_end) {
      positions.push_back(s.end);
    } else {
      positions.push_back(interpolate(s.start, s.end, fraction));
    }
  }
  return pushforward(positions, lift.weights);
}

DiscreteMeasure ray_section(const RayMeasure& ray, double t) {
  require_time(t);
  std::vector<Point> positions;
  positions.reserve(ray.rays.size());
  for (const AmbientRay& r : ray.rays) positions.push_back(ray_point(r, t));
  return pushforward(positions, ray.weights);
}

GeodesicLift restrict_ray(const RayMeasure& ray, double t1, double t2) {
  require_time(t1);
  if (!(t2 > t1) || !std::isfinite(t2)) throw InvalidArgument("restriction needs t1 < t2");
  std::vector<Point> starts;
  std::vector<Point> ends;
  std::vector<CouplingEntry> entries;
  for (std::size_t i = 0; i < ray.rays.size(); ++i) {
    starts.push_back(ray_point(ray.rays[i], t1));
    ends.push_back(ray_point(ray.rays[i], t2));
    entries.push_back({i, i, ray.weights[i]});
  }
  DiscreteMeasure left(std::move(starts), ray.weights);
  DiscreteMeasure right(std::move(ends), ray.weights);
  const double cost = transport_cost(left, right, entries, ray.p);
  return lift_geodesic(Coupling{std::move(left), std::move(right), std::move(entries), ray.p, cost});
}

std::vector<GlueEntry> glue(const GeodesicLift& alpha, const Coupling& beta) {
  using Key = std::vector<double>;
  std::map<Key, double> endpoint_mass;
  for (std::size_t i = 0; i < alpha.segments.size(); ++i) {
    endpoint_mass[position_key(alpha.segments[i].end)] += alpha.weights[i];
  }
  // beta conditioned on its left position: key -> (right index -> mass)
  std::map<Key, std::map<std::size_t, double>> conditional;
  std::map<Key, double> left_mass;
  for (const auto& e : beta.entries) {
    const Key key = position_key(beta.left_marginal.atom(e.left));
    conditional[key][e.right] += e.mass;
    left_mass[key] += e.mass;
  }
  for (std::size_t i = 0; i < beta.left_marginal.size(); ++i) {
    left_mass.try_emplace(position_key(beta.left_marginal.atom(i)), 0.0);
  }
  for (const auto& [key, mass] : left_mass) {
    const auto it = endpoint_mass.find(key);
    const double other = it == endpoint_mass.end() ? 0.0 : it->second;
    if (std::abs(other - mass) > kGlueTolerance) {
      throw MarginalMismatch("glue: endpoint law and coupling marginal disagree");
    }
  }
  for (const auto& [key, mass] : endpoint_mass) {
    if (!left_mass.contains(key) && mass > kGlueTolerance) {
      throw MarginalMismatch("glue: endpoint law has an atom the coupling lacks");
    }
  }

  std::vector<GlueEntry> out;
  for (std::size_t i = 0; i < alpha.segments.size(); ++i) {
    const Key key = position_key(alpha.segments[i].end);
    const auto cond = conditional.find(key);
    if (cond == conditional.end()) continue;
    const double pooled = left_mass.at(key);
    for (const auto& [j, m] : cond->second) {
      const double mass = alpha.weights[i] * m / pooled;
      if (mass > 0.0) out.push_back({i, j, mass});
    }
  }
  return out;
}

std::vector<std::pair<double, double>> default_validation_pairs() {
  return {{0.0, 1.0}, {0.0, 2.0}, {1.0, 3.0}, {0.0, 10.0}};
}

RayValidationReport validate_ray(const RayMeasure& ray,
                                 const std::vector<std::pair<double, double>>& extra_pairs) {
  auto pairs = default_validation_pairs();
  for (const auto& [t1, t2] : extra_pairs) {
    if (!(t1 >= 0.0) || !(t2 > t1) || !std::isfinite(t2)) {
      throw InvalidArgument("time pairs must satisfy 0 <= t1 < t2");
    }
    pairs.emplace_back(t1, t2);
  }
  RayValidationReport report{ray.speed, {}, true};
  for (const auto& [t1, t2] : pairs) {
    double moment = 0.0;
    for (std::size_t i = 0; i < ray.rays.size(); ++i) {
      moment += ray.weights[i] * std::pow(distance(ray_point(ray.rays[i], t1), ray_point(ray.rays[i], t2)), ray.p);
    }
    const double induced = std::pow(moment, 1.0 / ray.p);
    const double optimal = wasserstein_distance(ray_section(ray, t1), ray_section(ray, t2), ray.p);
    const double gap = induced > 0.0 ? (induced - optimal) / induced : 0.0;
    const double speed_error = std::abs(optimal - (t2 - t1) * ray.speed);
    const bool ok = gap <= kRayOptimalityTolerance && speed_error <= kRayOptimalityTolerance;
    report.pairs.push_back({t1, t2, induced, optimal, gap, speed_error, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

}  // namespace wasp
