#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wasp::detail {

struct Flow {
  std::size_t row;
  std::size_t col;
  double mass;
};

/// Exact minimum-cost transportation on the complete bipartite graph.
///
/// `cost` is row-major, supply.size() x demand.size(). Supplies and demands
/// must balance. Returns the positive flows ordered by (row, col).
///
/// Primal network simplex on the transportation tableau: northwest-corner
/// start, u/v potentials from the basis tree, Dantzig pricing with
/// lexicographic tie-break. After a long run of degenerate pivots it switches
/// to Bland's rule, which cannot cycle.
std::vector<Flow> solve_transport(std::span<const double> supply, std::span<const double> demand,
                                  std::span<const double> cost);

}  // namespace wasp::detail
