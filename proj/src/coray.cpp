#include "wasp/coray.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "wasp/errors.hpp"

namespace wasp {

namespace {

struct GeodesicStep {
  Coupling coupling;
  std::vector<DiscreteMeasure> sections;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Busemann values of several measures, all truncated at one common time.
struct MatchedValues {
  std::vector<double> values;
  std::vector<double> decrements;
  double t_eval;
};

MatchedValues matched_busemann(const RayMeasure& ray, const std::vector<DiscreteMeasure>& measures,
                               const BusemannOptions& options) {
  std::vector<BusemannEstimate> estimates;
  estimates.reserve(measures.size());
  double t = 0.0;
  for (const auto& m : measures) {
    estimates.push_back(busemann_value(ray, m, options));
    t = std::max(t, estimates.back().t_final);
  }
  MatchedValues out{{}, {}, t};
  for (std::size_t i = 0; i < measures.size(); ++i) {
    const auto& e = estimates[i];
    out.values.push_back(e.t_final == t ? e.value : truncated_busemann(ray, measures[i], t));
    out.decrements.push_back(e.last_decrement);
  }
  return out;
}

}  // namespace

std::vector<double> default_coray_schedule() {
  std::vector<double> out;
  for (int n = 1; n <= 16; ++n) out.push_back(std::ldexp(1.0, n));
  return out;
}

std::vector<double> default_test_times() { return {0.0, 0.5, 1.0, 2.0, 4.0}; }

CorayResult construct_coray(const RayMeasure& mu, const DiscreteMeasure& nu0,
                            const CorayOptions& options) {
  require_unit_speed(mu);
  const auto& schedule = options.schedule;
  if (schedule.size() < 2) throw InvalidArgument("co-ray schedule needs at least two entries");
  for (std::size_t n = 0; n < schedule.size(); ++n) {
    if (!(schedule[n] > 0.0) || !std::isfinite(schedule[n]) || (n > 0 && !(schedule[n] > schedule[n - 1]))) {
      throw InvalidArgument("co-ray schedule must be positive and strictly increasing");
    }
  }
  for (double tau : options.test_times) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw InvalidArgument("test times must be >= 0");
  }
  if (!options.start_sequence.empty() && options.start_sequence.size() != schedule.size()) {
    throw InvalidArgument("start sequence must match the schedule length");
  }
  if (nu0.dim() != mu.rays.front().origin.dim()) throw DimensionMismatch("co-ray start has wrong dimension");

  const std::size_t count = schedule.size();
  const DiscreteMeasure mu0 = ray_section(mu, 0.0);
  std::vector<std::optional<GeodesicStep>> steps(count);
  std::vector<CorayStep> records(count);
  parallel_for(count, options.threads, [&](std::size_t n) {
    const DiscreteMeasure& start = options.start_sequence.empty() ? nu0 : options.start_sequence[n];
    Coupling pi = solve_ot(start, ray_section(mu, schedule[n]), mu.p);
    const GeodesicLift lift = lift_geodesic(pi);
    std::vector<DiscreteMeasure> sections;
    for (double tau : options.test_times) sections.push_back(section(lift, tau));
    records[n] = {schedule[n], pi.cost, std::abs(pi.cost / schedule[n] - 1.0),
                  wasserstein_distance(start, mu0, mu.p) / schedule[n]};
    steps[n] = GeodesicStep{std::move(pi), std::move(sections)};
  });

  std::vector<double> diagnostics(count - 1, 0.0);
  parallel_for(count - 1, options.threads, [&](std::size_t k) {
    double worst = 0.0;
    for (std::size_t i = 0; i < options.test_times.size(); ++i) {
      worst = std::max(worst, wasserstein_distance(steps[k]->sections[i], steps[k + 1]->sections[i], mu.p));
    }
    diagnostics[k] = worst;
  });

  const Coupling& last = steps.back()->coupling;
  if (!(last.cost > 0.0)) throw SolverError("final geodesic has zero length");
  std::vector<AmbientRay> rays;
  std::vector<double> weights;
  for (const auto& e : last.entries) {
    const Point& x = last.left_marginal.atom(e.left);
    const Point& y = last.right_marginal.atom(e.right);
    rays.push_back({x, (1.0 / last.cost) * (y - x)});
    weights.push_back(e.mass);
  }
  // Coupling masses can drift from summing to one by a few ulps per pivot.
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;

  CorayResult result{make_ray_measure(std::move(rays), std::move(weights), mu.p), schedule,
                     std::move(records), std::move(diagnostics), false};
  result.converged = result.diagnostics.back() < options.tol;
  return result;
}

GradientReport coray_gradient_check(const RayMeasure& mu, const RayMeasure& coray,
                                    const std::vector<double>& times, double tol,
                                    const BusemannOptions& busemann) {
  require_unit_speed(mu);
  require_unit_speed(coray);
  std::vector<DiscreteMeasure> sections;
  for (double t : times) sections.push_back(ray_section(coray, t));
  const auto matched = matched_busemann(mu, sections, busemann);

  GradientReport report{{}, matched.t_eval, true};
  for (std::size_t a = 0; a < times.size(); ++a) {
    for (std::size_t b = 0; b < times.size(); ++b) {
      if (!(times[a] < times[b])) continue;
      const double delta = matched.values[b] - matched.values[a];
      const double error = std::abs(delta - (times[a] - times[b]));
      const double slack = matched.decrements[a] + matched.decrements[b] + 2.0 * kMonotoneSlack;
      const bool ok = error <= tol + slack;
      report.pairs.push_back({times[a], times[b], delta, error, slack, ok});
      report.pass = report.pass && ok;
    }
  }
  return report;
}

SubadditivityReport busemann_subadditivity_check(const RayMeasure& mu, const RayMeasure& coray,
                                                 const DiscreteMeasure& lambda, double tol,
                                                 const BusemannOptions& busemann) {
  require_unit_speed(mu);
  require_unit_speed(coray);
  const auto mu_values = matched_busemann(mu, {lambda, ray_section(coray, 0.0)}, busemann);
  const auto coray_value = busemann_value(coray, lambda, busemann);
  SubadditivityReport report{};
  report.b_mu_lambda = mu_values.values[0];
  report.b_mu_start = mu_values.values[1];
  report.b_coray_lambda = coray_value.value;
  report.margin = report.b_coray_lambda + report.b_mu_start - report.b_mu_lambda;
  report.slack = mu_values.decrements[0] + mu_values.decrements[1] + coray_value.last_decrement +
                 3.0 * kMonotoneSlack;
  report.pass = report.margin >= -(tol + report.slack);
  return report;
}

SubrayReport subray_uniqueness_check(const RayMeasure& mu, const RayMeasure& coray, double tau,
                                     const std::vector<double>& schedule,
                                     const std::vector<double>& test_times, double tol) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidArgument("tau must be positive");
  CorayOptions options;
  options.schedule = schedule;
  options.test_times = test_times;
  SubrayReport report{construct_coray(mu, ray_section(coray, tau), options), {}, 0.0, false};
  for (double t : test_times) {
    const double gap = wasserstein_distance(ray_section(report.reconstruction.ray, t),
                                            ray_section(coray, t + tau), mu.p);
    report.discrepancies.push_back(gap);
    report.max_discrepancy = std::max(report.max_discrepancy, gap);
  }
  report.pass = report.reconstruction.converged && report.max_discrepancy <= tol;
  return report;
}

ViscosityReport viscosity_check(const RayMeasure& mu, const DiscreteMeasure& nu0,
                                const std::vector<DiscreteMeasure>& probes, double tol,
                                const CorayOptions& coray_options, const BusemannOptions& busemann) {
  require_unit_speed(mu);
  ViscosityReport report{};
  report.coray = construct_coray(mu, nu0, coray_options);
  const DiscreteMeasure along = ray_section(report.coray.ray, 1.0);

  std::vector<DiscreteMeasure> measures{nu0, along};
  for (const auto& probe : probes) measures.push_back(probe);
  const auto matched = matched_busemann(mu, measures, busemann);
  const double b_start = matched.values[0];
  double worst_decrement = 0.0;
  for (double d : matched.decrements) worst_decrement = std::max(worst_decrement, d);
  report.slack = 2.0 * (worst_decrement + kMonotoneSlack);

  report.inequality_pass = true;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const double dist = wasserstein_distance(nu0, probes[k], mu.p);
    if (dist == 0.0) continue;  // lambda = nu_0 is excluded
    const double b_probe = matched.values[k + 2];
    const double margin = dist + b_probe - b_start;
    const bool ok = margin >= -report.slack;
    report.probes.push_back({b_start, dist, b_probe, margin, ok});
    report.inequality_pass = report.inequality_pass && ok;
  }

  const double along_dist = wasserstein_distance(nu0, along, mu.p);
  report.equality_gap = std::abs(b_start - (along_dist + matched.values[1]));
  report.equality_pass = report.coray.converged && report.equality_gap <= tol + report.slack;
  report.pass = report.inequality_pass && report.equality_pass;
  return report;
}

}  // namespace wasp
