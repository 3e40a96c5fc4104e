#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wasp/ambient.hpp"
#include "wasp/measure.hpp"
#include "wasp/ot.hpp"

namespace wasp {

struct Segment {
  Point start;
  Point end;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lifted geodesic of P_p: a weighted family of constant-speed segments.
///
/// The geodesic is parameterized by arc length on [0, length]; for t beyond
/// `length` every path is held at its endpoint.
struct GeodesicLift {
  std::vector<Segment> segments;
  std::vector<double> weights;
  double length;
  double p;

  friend bool operator==(const GeodesicLift&, const GeodesicLift&) = default;
};

/// A ray in P_p represented as a weighted family of ambient rays.
struct RayMeasure {
  std::vector<AmbientRay> rays;
  std::vector<double> weights;
  double p;
  /// (sum_i w_i |v_i|^p)^(1/p)
  double speed;

  friend bool operator==(const RayMeasure&, const RayMeasure&) = default;
};

/// Validates the family and computes its speed. Zero-weight rays are dropped.
RayMeasure make_ray_measure(std::vector<AmbientRay> rays, std::vector<double> weights, double p);

RayMeasure make_dirac_ray(const Point& origin, const Point& velocity, double p);

/// One ray per atom of mu0, all sharing `velocity`.
RayMeasure make_translation_ray(const DiscreteMeasure& mu0, const Point& velocity, double p);

/// Lifts an optimal coupling to the displacement interpolation between its
/// marginals. Throws NotOptimal when pi's cost exceeds a fresh solve by more
/// than 1e-8 relative.
GeodesicLift lift_geodesic(const Coupling& pi);

/// Law of the lifted paths at time min(t, length), coincident atoms merged.
DiscreteMeasure section(const GeodesicLift& lift, double t);

/// Law of the rays at time t, coincident atoms merged.
DiscreteMeasure ray_section(const RayMeasure& ray, double t);

/// The segment family of `ray` on [t1, t2], as a lifted geodesic between its
/// two sections. Throws NotOptimal when that family is not a geodesic.
GeodesicLift restrict_ray(const RayMeasure& ray, double t1, double t2);

struct GlueEntry {
  std::size_t segment;
  std::size_t right;
  double mass;

  friend bool operator==(const GlueEntry&, const GlueEntry&) = default;
};

/// Joins a lifted geodesic to a coupling that starts from its endpoint law.
///
/// mass(i, j) = w_i * beta(end_i, j) / marginal(end_i), with endpoints and
/// left atoms pooled by position. Throws MarginalMismatch when alpha's
/// endpoint law differs from beta's left marginal by more than 1e-9 per atom.
std::vector<GlueEntry> glue(const GeodesicLift& alpha, const Coupling& beta);

/// Time pairs always checked by validate_ray.
std::vector<std::pair<double, double>> default_validation_pairs();

struct RayPairCheck {
  double t1;
  double t2;
  double induced_cost;  // cost of the coupling (gamma_t1, gamma_t2)
  double optimal_cost;  // W_p between the two sections
  double relative_gap;  // (induced - optimal) / induced
  double speed_error;   // |W_p(sections) - (t2 - t1) k|
  bool pass;
};

struct RayValidationReport {
  double speed;
  std::vector<RayPairCheck> pairs;
  bool pass;
};

inline constexpr double kRayOptimalityTolerance = 1e-7;

/// Checks on finitely many time pairs (defaults plus `extra_pairs`) that the
/// ray family induces optimal couplings and the sections move at speed k.
RayValidationReport validate_ray(const RayMeasure& ray,
                                 const std::vector<std::pair<double, double>>& extra_pairs = {});

}  // namespace wasp
