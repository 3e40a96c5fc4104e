#include "wasp/ot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wasp/errors.hpp"
#include "wasp/transport_simplex.hpp"

namespace wasp {

namespace {

constexpr std::size_t kBruteForceMaxAtoms = 8;

void require_compatible(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
  require_exponent(p);
  if (mu.dim() != nu.dim()) {
    throw DimensionMismatch("measures live in R^" + std::to_string(mu.dim()) + " and R^" +
                            std::to_string(nu.dim()));
  }
}

}  // namespace

void require_exponent(double p) {
  if (!(p > 1.0 && p <= kMaxExponent)) {
    throw InvalidExponent("exponent p must lie in (1, 16], got " + std::to_string(p));
  }
}

double transport_cost(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                      const std::vector<CouplingEntry>& entries, double p) {
  double total = 0.0;
  for (const auto& e : entries) {
    total += e.mass * std::pow(distance(mu.atom(e.left), nu.atom(e.right)), p);
  }
  return std::pow(total, 1.0 / p);
}

double marginal_error(const Coupling& pi) {
  std::vector<double> rows(pi.left_marginal.size(), 0.0);
  std::vector<double> cols(pi.right_marginal.size(), 0.0);
  for (const auto& e : pi.entries) {
    rows[e.left] += e.mass;
    cols[e.right] += e.mass;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, std::abs(rows[i] - pi.left_marginal.weight(i)));
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    worst = std::max(worst, std::abs(cols[j] - pi.right_marginal.weight(j)));
  }
  return worst;
}

Coupling solve_ot(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
  require_compatible(mu, nu, p);
  const std::size_t m = mu.size();
  const std::size_t n = nu.size();
  std::vector<double> cost(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i * n + j] = std::pow(distance(mu.atom(i), nu.atom(j)), p);
    }
  }
  const auto flows = detail::solve_transport(mu.weights(), nu.weights(), cost);
  std::vector<CouplingEntry> entries;
  entries.reserve(flows.size());
  for (const auto& f : flows) entries.push_back({f.row, f.col, f.mass});
  const double w = transport_cost(mu, nu, entries, p);
  return Coupling{mu, nu, std::move(entries), p, w};
}

double wasserstein_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
  return solve_ot(mu, nu, p).cost;
}

Coupling brute_force_ot(const DiscreteMeasure& mu, const DiscreteMeasure& nu, double p) {
  require_compatible(mu, nu, p);
  if (mu.size() != nu.size()) throw InvalidArgument("brute force needs equal-size supports");
  if (!mu.is_uniform() || !nu.is_uniform()) throw InvalidArgument("brute force needs uniform measures");
  const std::size_t n = mu.size();
  if (n > kBruteForceMaxAtoms) throw InvalidArgument("brute force limited to 8 atoms");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best = perm;
  double best_total = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += std::pow(distance(mu.atom(i), nu.atom(perm[i])), p);
    if (total < best_total) {
      best_total = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<CouplingEntry> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, best[i], mu.weight(i)});
  const double w = transport_cost(mu, nu, entries, p);
  return Coupling{mu, nu, std::move(entries), p, w};
}

TailBoundReport tail_mass_bound_check(const Coupling& pi, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("tail bound radius must be positive");
  }
  double tail = 0.0;
  for (const auto& e : pi.entries) {
    if (distance(pi.left_marginal.atom(e.left), pi.right_marginal.atom(e.right)) > radius) {
      tail += e.mass;
    }
  }
  const double bound = std::pow(pi.cost / radius, pi.p);
  return {radius, tail, bound, tail <= bound * (1.0 + 1e-12) + 1e-15};
}

}  // namespace wasp
