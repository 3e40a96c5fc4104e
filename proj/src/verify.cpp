#include "wasp/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "wasp/coray.hpp"
#include "wasp/errors.hpp"
#include "wasp/io.hpp"
#include "wasp/random.hpp"

namespace wasp {

namespace {

using io::format_number;

class Suite {
 public:
  Suite(std::string name, std::vector<VerifyCheck>& out) : name_(std::move(name)), out_(out) {}

  void add(std::string check, std::string property, bool pass, std::string detail) {
    out_.push_back({name_, std::move(check), std::move(property), pass, std::move(detail)});
  }

 private:
  std::string name_;
  std::vector<VerifyCheck>& out_;
};

// FNV-1a; fixed so that suite streams do not depend on the standard library.
std::uint64_t stream_id(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string kv(const std::string& key, double value) { return key + "=" + format_number(value); }

void suite_ot(Rng& rng, Suite& s) {
  double worst_oracle = 0.0;
  double worst_marginal = 0.0;
  bool tail_ok = true;
  bool deterministic = true;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t d = 1 + rng() % 3;
    const double p = std::array{1.5, 2.0, 3.0}[rng() % 3];
    const auto mu = random_uniform_measure(rng, n, d, -3.0, 3.0);
    const auto nu = random_uniform_measure(rng, n, d, -3.0, 3.0);
    const auto pi = solve_ot(mu, nu, p);
    const double oracle = brute_force_ot(mu, nu, p).cost;
    worst_oracle = std::max(worst_oracle, oracle > 0.0 ? std::abs(pi.cost - oracle) / oracle : std::abs(pi.cost));
    worst_marginal = std::max(worst_marginal, marginal_error(pi));
    deterministic = deterministic && solve_ot(mu, nu, p) == pi;
    if (pi.cost > 0.0) {
      for (double f : {0.5, 1.0, 2.0}) tail_ok = tail_ok && tail_mass_bound_check(pi, f * pi.cost).pass;
    }
  }
  s.add("oracle-equivalence", "exact solver matches permutation enumeration", worst_oracle <= 1e-8,
        kv("max_rel_gap", worst_oracle));
  s.add("marginals", "coupling reproduces both marginals", worst_marginal <= kMarginalTolerance,
        kv("max_error", worst_marginal));
  s.add("determinism", "identical input gives identical coupling", deterministic, "");
  s.add("tail-bound", "mass beyond R is at most (W_p/R)^p", tail_ok, "R in {W/2, W, 2W}");

  double worst_sym = 0.0;
  double worst_tri = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double p = std::array{1.5, 2.0, 3.0}[rng() % 3];
    const auto a = random_measure(rng, 1 + rng() % 5, 2, -2.0, 2.0);
    const auto b = random_measure(rng, 1 + rng() % 5, 2, -2.0, 2.0);
    const auto c = random_measure(rng, 1 + rng() % 5, 2, -2.0, 2.0);
    const double ab = wasserstein_distance(a, b, p);
    worst_sym = std::max(worst_sym, std::abs(ab - wasserstein_distance(b, a, p)));
    worst_tri = std::max(worst_tri, wasserstein_distance(a, c, p) - ab - wasserstein_distance(b, c, p));
  }
  s.add("symmetry", "W_p(a, b) = W_p(b, a)", worst_sym <= 1e-10, kv("max_error", worst_sym));
  s.add("triangle", "W_p(a, c) <= W_p(a, b) + W_p(b, c)", worst_tri <= 1e-7, kv("max_excess", worst_tri));
}

void suite_geodesic(Rng& rng, Suite& s) {
  double worst_speed = 0.0;
  bool clamp_ok = true;
  double worst_glue = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double p = std::array{1.5, 2.0, 3.0}[k % 3];
    const auto lift = lift_geodesic(
        solve_ot(random_measure(rng, 1 + rng() % 5, 2, -2, 2), random_measure(rng, 1 + rng() % 5, 2, -2, 2), p));
    for (int j = 0; j < 10; ++j) {
      double a = lift.length * static_cast<double>(rng() % 1001) / 1000.0;
      double b = lift.length * static_cast<double>(rng() % 1001) / 1000.0;
      if (a > b) std::swap(a, b);
      worst_speed = std::max(worst_speed, std::abs(wasserstein_distance(section(lift, a), section(lift, b), p) - (b - a)));
    }
    clamp_ok = clamp_ok && section(lift, lift.length + 1.0) == section(lift, lift.length);

    const auto ends = section(lift, lift.length);
    const auto beta = solve_ot(ends, random_measure(rng, 1 + rng() % 4, 2, -2, 2), p);
    const auto joint = glue(lift, beta);
    std::vector<double> seg(lift.segments.size(), 0.0);
    for (const auto& e : joint) seg[e.segment] += e.mass;
    for (std::size_t i = 0; i < seg.size(); ++i) worst_glue = std::max(worst_glue, std::abs(seg[i] - lift.weights[i]));
  }
  s.add("speed-identity", "W_p(mu_s, mu_t) = |t - s| along lifted geodesics", worst_speed <= 1e-6,
        kv("max_error", worst_speed));
  s.add("endpoint-clamp", "sections past the length equal the endpoint law", clamp_ok, "");
  s.add("glue-projection", "glued law projects back onto the lifted geodesic", worst_glue <= 1e-9,
        kv("max_error", worst_glue));
}

void suite_ray(Rng& rng, Suite& s) {
  const auto dirac = validate_ray(make_dirac_ray(random_point(rng, 2, -1, 1), random_unit_vector(rng, 2), 2.0));
  s.add("dirac-ray", "sections of a Dirac ray are optimally coupled", dirac.pass, "");
  bool translations = true;
  for (int k = 0; k < 5; ++k) {
    const auto ray = make_translation_ray(random_measure(rng, 4, 2, -1, 1), random_unit_vector(rng, 2), 2.0);
    translations = translations && validate_ray(ray).pass;
  }
  s.add("translation-ray", "sections of translation rays are optimally coupled", translations, "5 instances");
  const auto crossing = validate_ray(make_ray_measure(
      {AmbientRay{Point{0.0}, Point{1.0}}, AmbientRay{Point{10.0}, Point{-1.0}}}, {0.5, 0.5}, 2.0));
  const double gap = crossing.pairs.back().relative_gap;
  s.add("crossing-rays", "crossing rays are rejected", !crossing.pass && gap > 0.0, kv("gap", gap));
}

void suite_busemann(Rng& rng, Suite& s) {
  const auto e1 = make_dirac_ray(Point{0.0, 0.0}, Point{1.0, 0.0}, 2.0);
  bool monotone = true;
  double worst_closed = 0.0;
  const auto track = [&](const BusemannEstimate& est) {
    for (std::size_t k = 1; k < est.schedule.size(); ++k) {
      monotone = monotone && est.schedule[k].value <= est.schedule[k - 1].value + kMonotoneSlack;
    }
    monotone = monotone && est.value >= est.lower_bound - kMonotoneSlack;
  };
  for (int k = 0; k < 10; ++k) {
    const Point x = random_point(rng, 2, -5, 5);
    const auto est = busemann_value(e1, DiscreteMeasure::dirac(x));
    track(est);
    worst_closed = std::max(worst_closed, std::abs(est.value + x[0]));
  }
  s.add("closed-form", "Dirac values equal -<x, e1>", worst_closed <= 1e-4, kv("max_error", worst_closed));

  const auto ray = make_translation_ray(random_measure(rng, 3, 2, -1, 1), random_unit_vector(rng, 2), 2.0);
  double worst_along = 0.0;
  for (double t : {0.0, 1.0, 2.0, 5.0}) {
    const auto est = busemann_value(ray, ray_section(ray, t));
    track(est);
    worst_along = std::max(worst_along, std::abs(est.value + t));
  }
  s.add("along-ray", "b(mu_s) = -s", worst_along <= 1e-10, kv("max_error", worst_along));

  bool lipschitz = true;
  for (int k = 0; k < 20; ++k) {
    const auto a = random_measure(rng, 3, 2, -2, 2);
    const auto b = random_measure(rng, 2, 2, -2, 2);
    lipschitz = lipschitz && lipschitz_check(ray, a, b, 1e-6).pass;
    track(busemann_value(ray, a));
  }
  s.add("lipschitz", "|b(a) - b(b)| <= W_p(a, b)", lipschitz, "20 pairs");
  s.add("monotone", "W_p(nu, mu_t) - t non-increasing and >= -W_p(nu, mu_0)", monotone, "");
}

void suite_coray(Rng& rng, Suite& s, unsigned threads) {
  const auto e1 = make_dirac_ray(Point{0.0, 0.0}, Point{1.0, 0.0}, 2.0);
  const auto translation = make_translation_ray(random_uniform_measure(rng, 3, 2, 0, 1), random_unit_vector(rng, 2), 2.0);
  struct Case {
    std::string name;
    RayMeasure mu;
    DiscreteMeasure nu0;
  };
  const std::vector<Case> cases{{"dirac", e1, DiscreteMeasure::dirac({0.0, 1.0})},
                                {"translation", translation, random_uniform_measure(rng, 3, 2, 0, 1)}};
  CorayOptions options;
  options.threads = threads;
  const std::vector<double> times{0.0, 1.0, 2.0, 4.0};
  for (const auto& c : cases) {
    const auto result = construct_coray(c.mu, c.nu0, options);
    s.add(c.name + "-converged", "successive geodesic sections settle", result.converged,
          kv("last_diagnostic", result.diagnostics.back()));
    bool ratio = true;
    for (const auto& step : result.steps) ratio = ratio && step.ratio_error <= step.ratio_bound + 1e-9;
    s.add(c.name + "-ratio", "|L_n/t_n - 1| <= W_p(nu_0, mu_0)/t_n", ratio, "");
    s.add(c.name + "-valid", "constructed co-ray is a ray", validate_ray(result.ray).pass, kv("speed", result.ray.speed));

    const auto gradient = coray_gradient_check(c.mu, result.ray, times, 1e-3);
    double worst = 0.0;
    for (const auto& pr : gradient.pairs) worst = std::max(worst, pr.error);
    s.add(c.name + "-gradient", "b(nu_t) - b(nu_s) = s - t", gradient.pass, kv("max_error", worst));

    const auto subray = subray_uniqueness_check(c.mu, result.ray, 1.0, options.schedule, options.test_times, 1e-3);
    s.add(c.name + "-subray", "co-ray from nu_tau is the subray", subray.pass,
          kv("max_discrepancy", subray.max_discrepancy));

    std::vector<DiscreteMeasure> probes;
    for (int k = 0; k < 10; ++k) probes.push_back(random_measure(rng, 3, 2, -5, 5));
    const auto visc = viscosity_check(c.mu, c.nu0, probes, 1e-3, options);
    s.add(c.name + "-viscosity-inequality", "b(nu_0) <= W_p(nu_0, lambda) + b(lambda)", visc.inequality_pass,
          "10 probes");
    s.add(c.name + "-viscosity-equality", "minimum attained along the co-ray", visc.equality_pass,
          kv("gap", visc.equality_gap));

    bool sub = true;
    for (int k = 0; k < 10; ++k) {
      sub = sub && busemann_subadditivity_check(c.mu, result.ray, random_measure(rng, 3, 2, -4, 4), 1e-3).pass;
    }
    s.add(c.name + "-subadditivity", "b_mu(lambda) <= b_nu(lambda) + b_mu(nu_0)", sub, "10 measures");
  }
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "seed " << seed << '\n';
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.suite << '/' << c.name << " : " << c.property;
    if (!c.detail.empty()) out << " [" << c.detail << ']';
    out << '\n';
    passed += c.pass ? 1 : 0;
  }
  out << passed << '/' << checks.size() << " checks passed\n";
  return out.str();
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"ot", "geodesic", "ray", "busemann", "coray", "all"};
  return names;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed, unsigned threads) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidArgument("unknown verification suite: " + suite);
  }
  VerifyReport report{seed, {}};
  const bool all = suite == "all";
  // Each suite draws from its own stream so suites are reproducible alone.
  const auto run = [&](const std::string& name, const std::function<void(Rng&, Suite&)>& body) {
    if (!all && suite != name) return;
    Rng rng(seed ^ stream_id(name));
    Suite s(name, report.checks);
    body(rng, s);
  };
  run("ot", suite_ot);
  run("geodesic", suite_geodesic);
  run("ray", suite_ray);
  run("busemann", suite_busemann);
  run("coray", [threads](Rng& rng, Suite& s) { suite_coray(rng, s, threads); });
  return report;
}

}  // namespace wasp
