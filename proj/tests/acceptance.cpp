// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "wasp/coray.hpp"
#include "wasp/random.hpp"
#include "wasp/verify.hpp"

using namespace wasp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

// Shared state between criteria.
std::vector<Coupling> g_couplings;          // optimal couplings from criteria 1-3
std::vector<BusemannEstimate> g_estimates;  // every busemann_value run
std::vector<CorayResult> g_constructions;   // every co-ray construction

BusemannEstimate record(BusemannEstimate est) {
  g_estimates.push_back(est);
  return est;
}

const CorayResult& record(CorayResult r) {
  g_constructions.push_back(std::move(r));
  return g_constructions.back();
}

const RayMeasure kE1Ray = make_dirac_ray(Point{0.0, 0.0}, Point{1.0, 0.0}, 2.0);

struct CorayCase {
  std::string name;
  RayMeasure mu;
  DiscreteMeasure nu0;
  RayMeasure coray;
};

std::vector<CorayCase> g_cases;

Outcome criterion_oracle() {
  Rng rng(1);
  const auto start = Clock::now();
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t d = 1 + rng() % 3;
    const double p = std::array{1.5, 2.0, 3.0}[rng() % 3];
    const auto mu = random_uniform_measure(rng, n, d, -3.0, 3.0);
    const auto nu = random_uniform_measure(rng, n, d, -3.0, 3.0);
    const auto pi = solve_ot(mu, nu, p);
    const double oracle = brute_force_ot(mu, nu, p).cost;
    worst = std::max(worst, oracle > 0.0 ? std::abs(pi.cost - oracle) / oracle : std::abs(pi.cost));
    g_couplings.push_back(pi);
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-8 && elapsed < 5.0, fmt("max rel gap %.3g, %.3f s", worst, elapsed)};
}

Outcome criterion_metric() {
  Rng rng(2);
  double worst_sym = 0.0;
  double worst_tri = -1e300;
  for (int k = 0; k < 200; ++k) {
    const double p = std::array{1.5, 2.0, 3.0}[rng() % 3];
    const auto a = random_measure(rng, 1 + rng() % 5, 2, -2.0, 2.0);
    const auto b = random_measure(rng, 1 + rng() % 5, 2, -2.0, 2.0);
    const auto c = random_measure(rng, 1 + rng() % 5, 2, -2.0, 2.0);
    const auto ab = solve_ot(a, b, p);
    const auto bc = solve_ot(b, c, p);
    const auto ac = solve_ot(a, c, p);
    worst_sym = std::max(worst_sym, std::abs(ab.cost - wasserstein_distance(b, a, p)));
    worst_tri = std::max(worst_tri, ac.cost - ab.cost - bc.cost);
    g_couplings.insert(g_couplings.end(), {ab, bc, ac});
  }
  return {worst_sym <= 1e-10 && worst_tri <= 1e-7, fmt("max asymmetry %.3g, max triangle excess %.3g", worst_sym, worst_tri)};
}

Outcome criterion_geodesic_speed() {
  Rng rng(3);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double p = std::array{1.5, 2.0, 3.0}[k % 3];
    const auto pi = solve_ot(random_measure(rng, 1 + rng() % 5, 2, -2, 2), random_measure(rng, 1 + rng() % 5, 2, -2, 2), p);
    g_couplings.push_back(pi);
    const auto lift = lift_geodesic(pi);
    for (int j = 0; j < 10; ++j) {
      double s = lift.length * static_cast<double>(rng() % 1001) / 1000.0;
      double t = lift.length * static_cast<double>(rng() % 1001) / 1000.0;
      worst = std::max(worst, std::abs(wasserstein_distance(section(lift, s), section(lift, t), p) - std::abs(t - s)));
    }
  }
  return {worst <= 1e-6, fmt("max speed error %.3g over 500 pairs", worst)};
}

Outcome criterion_tail_bound() {
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& pi : g_couplings) {
    if (pi.cost == 0.0) continue;
    for (double f : {0.5, 1.0, 2.0}) {
      ok = ok && tail_mass_bound_check(pi, f * pi.cost).pass;
      ++checked;
    }
  }
  return {ok && checked > 0, fmt("%.0f checks", static_cast<double>(checked))};
}

Outcome criterion_ray_validation() {
  Rng rng(5);
  bool ok = validate_ray(make_dirac_ray(Point{0.0, 0.0}, Point{1.0, 0.0}, 2.0)).pass &&
            validate_ray(make_dirac_ray(Point{1.0, -2.0, 0.5}, Point{0.0, 3.0, 1.0}, 3.0)).pass;
  for (int k = 0; k < 5; ++k) {
    ok = ok && validate_ray(make_translation_ray(random_measure(rng, 4, 2, -1, 1), random_unit_vector(rng, 2), 2.0)).pass;
  }
  const auto crossing = validate_ray(make_ray_measure(
      {AmbientRay{Point{0.0}, Point{1.0}}, AmbientRay{Point{10.0}, Point{-1.0}}}, {0.5, 0.5}, 2.0));
  const double gap = crossing.pairs.back().relative_gap;
  return {ok && !crossing.pass && gap > 0.0, fmt("crossing-rays gap at (0,10): %.3g", gap)};
}

Outcome criterion_closed_form() {
  Rng rng(7);
  BusemannOptions options;
  options.max_doublings = 24;
  const auto start = Clock::now();
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Point x = random_point(rng, 2, -5, 5);
    const auto est = record(busemann_value(kE1Ray, DiscreteMeasure::dirac(x), options));
    worst = std::max(worst, std::abs(est.value + x[0]));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-4 && elapsed < 1.0, fmt("max |value + a| %.3g, %.3f s", worst, elapsed)};
}

Outcome criterion_along_ray() {
  Rng rng(8);
  const std::vector<RayMeasure> rays{kE1Ray, make_translation_ray(random_measure(rng, 3, 2, -1, 1), random_unit_vector(rng, 2), 2.0),
                                     make_translation_ray(random_measure(rng, 4, 3, -1, 1), random_unit_vector(rng, 3), 3.0)};
  double worst = 0.0;
  for (const auto& ray : rays) {
    for (double s : {0.0, 1.0, 2.0, 5.0}) {
      worst = std::max(worst, std::abs(record(busemann_value(ray, ray_section(ray, s))).value + s));
    }
  }
  return {worst <= 1e-10, fmt("max |b(mu_s) + s| %.3g", worst)};
}

Outcome criterion_lipschitz() {
  Rng rng(9);
  const auto ray = make_translation_ray(random_measure(rng, 3, 2, -1, 1), random_unit_vector(rng, 2), 2.0);
  int passed = 0;
  for (int k = 0; k < 20; ++k) {
    const auto a = random_measure(rng, 3, 2, -2, 2);
    const auto b = random_measure(rng, 2, 2, -2, 2);
    record(busemann_value(ray, a));
    record(busemann_value(ray, b));
    passed += lipschitz_check(ray, a, b, 1e-6).pass ? 1 : 0;
  }
  return {passed == 20, fmt("%.0f/20 pairs", passed)};
}

Outcome criterion_gradient() {
  Rng rng(10);
  const auto start = Clock::now();
  const auto translation = make_translation_ray(random_uniform_measure(rng, 3, 2, 0, 1), random_unit_vector(rng, 2), 2.0);
  g_cases = {{"dirac", kE1Ray, DiscreteMeasure::dirac({0.0, 1.0}), kE1Ray},
             {"translation", translation, random_uniform_measure(rng, 3, 2, 0, 1), kE1Ray}};
  bool ok = true;
  double worst = 0.0;
  for (auto& c : g_cases) {
    const auto& built = record(construct_coray(c.mu, c.nu0));
    c.coray = built.ray;
    const auto report = coray_gradient_check(c.mu, c.coray, {0.0, 1.0, 2.0, 4.0}, 1e-3);
    for (const auto& pr : report.pairs) {
      worst = std::max(worst, pr.error);
      ok = ok && pr.error <= 1e-3;
    }
    ok = ok && built.converged && report.pairs.size() == 6;
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 30.0, fmt("max |db - (s - t)| %.3g, %.3f s", worst, elapsed)};
}

Outcome criterion_subray() {
  double worst = 0.0;
  bool ok = !g_cases.empty();
  for (const auto& c : g_cases) {
    const auto report = subray_uniqueness_check(c.mu, c.coray, 1.0, default_coray_schedule(), default_test_times(), 1e-3);
    record(report.reconstruction);
    worst = std::max(worst, report.max_discrepancy);
    ok = ok && report.reconstruction.converged && report.max_discrepancy <= 1e-3;
  }
  return {ok, fmt("max section discrepancy %.3g", worst)};
}

Outcome criterion_viscosity() {
  Rng rng(12);
  bool ok = !g_cases.empty();
  double worst_gap = 0.0;
  double min_margin = 1e300;
  for (const auto& c : g_cases) {
    std::vector<DiscreteMeasure> probes;
    for (int k = 0; k < 10; ++k) probes.push_back(random_measure(rng, 3, 2, -5, 5));
    const auto report = viscosity_check(c.mu, c.nu0, probes, 1e-3);
    record(report.coray);
    for (const auto& pr : report.probes) min_margin = std::min(min_margin, pr.margin);
    worst_gap = std::max(worst_gap, report.equality_gap);
    ok = ok && report.probes.size() == 10 && report.inequality_pass && report.equality_gap <= 1e-3 && report.coray.converged;
  }
  return {ok, fmt("min inequality margin %.3g, max equality gap %.3g", min_margin, worst_gap)};
}

Outcome criterion_monotone() {
  bool ok = !g_estimates.empty();
  for (const auto& est : g_estimates) {
    for (std::size_t k = 1; k < est.schedule.size(); ++k) {
      ok = ok && est.schedule[k].value <= est.schedule[k - 1].value + 1e-9;
    }
    for (const auto& s : est.schedule) ok = ok && s.value >= est.lower_bound - 1e-9;
  }
  return {ok, fmt("%.0f runs", static_cast<double>(g_estimates.size()))};
}

Outcome criterion_schedule_ratio() {
  std::size_t steps = 0;
  bool ok = !g_constructions.empty();
  for (const auto& r : g_constructions) {
    for (const auto& s : r.steps) {
      ok = ok && s.ratio_error <= s.ratio_bound + 1e-9;
      ++steps;
    }
  }
  return {ok, fmt("%.0f steps over %.0f constructions", static_cast<double>(steps), static_cast<double>(g_constructions.size()))};
}

Outcome criterion_determinism() {
  const auto first = run_verify("all", 1).text();
  const auto second = run_verify("all", 1).text();
  return {first == second, fmt("%.0f-byte report", static_cast<double>(first.size()))};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*run)();
  };
  // Criteria 4, 6 and 13 aggregate over earlier runs, so they execute last.
  const std::vector<Entry> order{
      {1, "OT oracle equivalence", criterion_oracle},
      {2, "metric axioms", criterion_metric},
      {3, "geodesic speed identity", criterion_geodesic_speed},
      {5, "ray validation", criterion_ray_validation},
      {7, "closed-form Busemann", criterion_closed_form},
      {8, "along-ray identity", criterion_along_ray},
      {9, "Lipschitz", criterion_lipschitz},
      {10, "co-ray gradient", criterion_gradient},
      {11, "subray uniqueness", criterion_subray},
      {12, "viscosity class", criterion_viscosity},
      {4, "tail-mass bound", criterion_tail_bound},
      {6, "Busemann monotonicity", criterion_monotone},
      {13, "schedule ratio", criterion_schedule_ratio},
      {14, "determinism", criterion_determinism},
  };
  std::map<int, std::pair<std::string, Outcome>> results;
  for (const auto& e : order) {
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    results[e.id] = {e.name, o};
  }
  int failures = 0;
  for (const auto& [id, entry] : results) {
    const auto& [name, o] = entry;
    std::printf("[%s] criterion %2d: %-26s %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}
