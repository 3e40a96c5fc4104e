#include "wasp/transport_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wasp/errors.hpp"

namespace wasp::detail {

namespace {

constexpr double kDropMass = 1e-15;

class Tableau {
 public:
  Tableau(std::span<const double> supply, std::span<const double> demand,
          std::span<const double> cost)
      : m_(supply.size()),
        n_(demand.size()),
        cost_(cost),
        flow_(m_ * n_, 0.0),
        basic_(m_ * n_, false),
        u_(m_),
        v_(n_),
        parent_(m_ + n_),
        seen_(m_ + n_) {
    double max_cost = 0.0;
    for (double c : cost_) max_cost = std::max(max_cost, std::abs(c));
    pricing_eps_ = 1e-12 * std::max(1.0, max_cost);
    northwest_corner(supply, demand);
  }

  void run() {
    const std::size_t max_iterations = 1000 + 50 * (m_ + n_) * (m_ + n_) * (m_ + n_);
    const std::size_t degenerate_limit = m_ * n_ + 16;
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
      compute_potentials();
      const auto entering = bland ? price_bland() : price_dantzig();
      if (entering == kNone) return;
      const double theta = pivot(entering);
      degenerate_run = theta > 0.0 ? 0 : degenerate_run + 1;
      if (degenerate_run > degenerate_limit) bland = true;
    }
    throw SolverError("transport simplex did not terminate");
  }

  std::vector<Flow> flows() const {
    std::vector<Flow> out;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double x = flow_[i * n_ + j];
        if (basic_[i * n_ + j] && x > kDropMass) out.push_back({i, j, x});
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Produces exactly m + n - 1 basic cells forming a spanning tree; ties
  // (both a row and a column exhausted) keep a degenerate zero cell.
  void northwest_corner(std::span<const double> supply, std::span<const double> demand) {
    std::vector<double> rem_a(supply.begin(), supply.end());
    std::vector<double> rem_b(demand.begin(), demand.end());
    std::size_t i = 0;
    std::size_t j = 0;
    while (true) {
      const double x = std::max(0.0, std::min(rem_a[i], rem_b[j]));
      basic_[i * n_ + j] = true;
      flow_[i * n_ + j] = x;
      rem_a[i] -= x;
      rem_b[j] -= x;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (i == m_ - 1) {
        ++j;
      } else if (j == n_ - 1) {
        ++i;
      } else if (rem_a[i] <= rem_b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Rows are nodes [0, m), columns are nodes [m, m + n).
  void build_adjacency() {
    row_adj_.assign(m_, {});
    col_adj_.assign(n_, {});
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (basic_[i * n_ + j]) {
          row_adj_[i].push_back(j);
          col_adj_[j].push_back(i);
        }
      }
    }
  }

  // Breadth-first search over the basis tree from `root`, recording parents.
  void traverse(std::size_t root) {
    std::fill(seen_.begin(), seen_.end(), false);
    queue_.clear();
    queue_.push_back(root);
    seen_[root] = true;
    parent_[root] = kNone;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t node = queue_[head];
      if (node < m_) {
        for (std::size_t j : row_adj_[node]) visit(node, m_ + j);
      } else {
        for (std::size_t i : col_adj_[node - m_]) visit(node, i);
      }
    }
    if (queue_.size() != m_ + n_) throw SolverError("transport simplex basis is not spanning");
  }

  void visit(std::size_t from, std::size_t to) {
    if (seen_[to]) return;
    seen_[to] = true;
    parent_[to] = from;
    queue_.push_back(to);
  }

  void compute_potentials() {
    build_adjacency();
    traverse(0);
    u_[0] = 0.0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      const std::size_t node = queue_[k];
      const std::size_t par = parent_[node];
      if (node < m_) {
        const std::size_t j = par - m_;
        u_[node] = cost_[node * n_ + j] - v_[j];
      } else {
        const std::size_t j = node - m_;
        v_[j] = cost_[par * n_ + j] - u_[par];
      }
    }
  }

  double reduced_cost(std::size_t i, std::size_t j) const {
    return cost_[i * n_ + j] - u_[i] - v_[j];
  }

  std::size_t price_dantzig() const {
    std::size_t best = kNone;
    double best_rc = -pricing_eps_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (basic_[i * n_ + j]) continue;
        const double rc = reduced_cost(i, j);
        if (rc < best_rc) {
          best_rc = rc;
          best = i * n_ + j;
        }
      }
    }
    return best;
  }

  std::size_t price_bland() const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!basic_[i * n_ + j] && reduced_cost(i, j) < -pricing_eps_) return i * n_ + j;
      }
    }
    return kNone;
  }

  // Pushes flow around the cycle closed by the entering cell; returns the
  // step length.
  double pivot(std::size_t entering) {
    const std::size_t ei = entering / n_;
    const std::size_t ej = entering % n_;
    traverse(ei);
    // Walk from column ej up to row ei; cells alternate -, +, -, ..., -.
    std::vector<std::size_t> minus;
    std::vector<std::size_t> plus;
    std::size_t node = m_ + ej;
    bool is_minus = true;
    while (node != ei) {
      const std::size_t par = parent_[node];
      const std::size_t cell = node < m_ ? node * n_ + (par - m_) : par * n_ + (node - m_);
      (is_minus ? minus : plus).push_back(cell);
      is_minus = !is_minus;
      node = par;
    }
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leaving = kNone;
    for (std::size_t cell : minus) {
      if (flow_[cell] < theta || (flow_[cell] == theta && cell < leaving)) {
        theta = flow_[cell];
        leaving = cell;
      }
    }
    theta = std::max(theta, 0.0);
    for (std::size_t cell : plus) flow_[cell] += theta;
    for (std::size_t cell : minus) flow_[cell] = std::max(0.0, flow_[cell] - theta);
    flow_[entering] = theta;
    flow_[leaving] = 0.0;
    basic_[leaving] = false;
    basic_[entering] = true;
    return theta;
  }

  std::size_t m_;
  std::size_t n_;
  std::span<const double> cost_;
  std::vector<double> flow_;
  std::vector<bool> basic_;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<std::size_t> parent_;
  std::vector<bool> seen_;
  std::vector<std::size_t> queue_;
  std::vector<std::vector<std::size_t>> row_adj_;
  std::vector<std::vector<std::size_t>> col_adj_;
  double pricing_eps_ = 0.0;
};

}  // namespace

std::vector<Flow> solve_transport(std::span<const double> supply, std::span<const double> demand,
                                  std::span<const double> cost) {
  if (supply.empty() || demand.empty()) throw InvalidArgument("transport: empty side");
  if (cost.size() != supply.size() * demand.size()) {
    throw InvalidArgument("transport: cost matrix has wrong shape");
  }
  Tableau tableau(supply, demand, cost);
  tableau.run();
  return tableau.flows();
}

}  // namespace wasp::detail
