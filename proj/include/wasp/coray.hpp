#pragma once

#include <vector>

#include "wasp/busemann.hpp"
#include "wasp/measure.hpp"
#include "wasp/path_measures.hpp"

namespace wasp {

/// t_n = 2^n, n = 1..16.
std::vector<double> default_coray_schedule();

/// {0, 1/2, 1, 2, 4}
std::vector<double> default_test_times();

inline constexpr double kDefaultCorayTol = 1e-4;

struct CorayOptions {
  std::vector<double> schedule = default_coray_schedule();
  std::vector<double> test_times = default_test_times();
  double tol = kDefaultCorayTol;
  /// Optional perturbed starting measures, one per schedule entry. Empty means
  /// every geodesic starts from nu0.
  std::vector<DiscreteMeasure> start_sequence;
  /// Worker threads for the per-step transport solves.
  unsigned threads = 1;
};

struct CorayStep {
  double t;
  double length;       // L_n = W_p(start, mu_{t_n})
  double ratio_error;  // |L_n / t_n - 1|
  double ratio_bound;  // W_p(start, mu_0) / t_n
};

struct CorayResult {
  RayMeasure ray;
  std::vector<double> schedule;
  std::vector<CorayStep> steps;
  /// diagnostics[n - 1] = max over test times of W_p between the sections of
  /// geodesics n - 1 and n.
  std::vector<double> diagnostics;
  bool converged;
};

/// Builds geodesics from nu0 to mu_{t_n} along the schedule and, from the last
/// one, the co-ray candidate: one unit-speed ray per coupling entry, origin
/// x_i and velocity (y_j - x_i) / L_N.
///
/// Non-convergence is reported through `converged`, not thrown.
CorayResult construct_coray(const RayMeasure& mu, const DiscreteMeasure& nu0,
                            const CorayOptions& options = {});

struct GradientPair {
  double s;
  double t;
  double delta_b;  // b(nu_t) - b(nu_s)
  double error;    // |delta_b - (s - t)|
  double slack;
  bool pass;
};

struct GradientReport {
  std::vector<GradientPair> pairs;
  double t_eval;
  bool pass;
};

/// Checks b_mu(nu_t) - b_mu(nu_s) = s - t for every pair s < t drawn from `times`.
GradientReport coray_gradient_check(const RayMeasure& mu, const RayMeasure& coray,
                                    const std::vector<double>& times, double tol,
                                    const BusemannOptions& busemann = {});

struct SubadditivityReport {
  double b_mu_lambda;
  double b_coray_lambda;
  double b_mu_start;
  double margin;  // b_coray(lambda) + b_mu(nu_0) - b_mu(lambda)
  double slack;
  bool pass;
};

/// b_mu(lambda) <= b_nu(lambda) + b_mu(nu_0), with b_nu the Busemann function
/// of the co-ray itself.
SubadditivityReport busemann_subadditivity_check(const RayMeasure& mu, const RayMeasure& coray,
                                                 const DiscreteMeasure& lambda, double tol,
                                                 const BusemannOptions& busemann = {});

struct SubrayReport {
  CorayResult reconstruction;
  std::vector<double> discrepancies;  // per test time
  double max_discrepancy;
  bool pass;
};

/// Rebuilds the co-ray from nu_tau and compares it with the subray t -> nu_{t + tau}.
SubrayReport subray_uniqueness_check(const RayMeasure& mu, const RayMeasure& coray, double tau,
                                     const std::vector<double>& schedule,
                                     const std::vector<double>& test_times, double tol);

struct ViscosityProbe {
  double b_start;   // b(nu_0)
  double distance;  // W_p(nu_0, lambda)
  double b_probe;   // b(lambda)
  double margin;    // distance + b_probe - b_start
  bool pass;
};

struct ViscosityReport {
  std::vector<ViscosityProbe> probes;
  CorayResult coray;
  double equality_gap;  // |b(nu_0) - (W_p(nu_0, nu_1) + b(nu_1))| along the co-ray
  double slack;
  bool inequality_pass;
  bool equality_pass;
  bool pass;
};

/// Both halves of metric-viscosity membership for b_mu at nu0: the
/// inequality against every probe distinct from nu0, and attainment along a
/// constructed co-ray at t = 1.
ViscosityReport viscosity_check(const RayMeasure& mu, const DiscreteMeasure& nu0,
                                const std::vector<DiscreteMeasure>& probes, double tol,
                                const CorayOptions& coray_options = {},
                                const BusemannOptions& busemann = {});

}  // namespace wasp
