#pragma once

#include <cstddef>
#include <vector>

#include "barrier/cell_partition.hpp"

namespace barrier {

struct AssignmentResult {
  std::vector<std::size_t> assignment;  // cell -> sensor
  double total_cost = 0.0;              // meaningful only when feasible
  bool feasible = false;
};

/// Minimum-cost injective assignment of every cell (column) to a distinct
/// sensor (row). Shortest augmenting paths with vertex potentials,
/// O(m^2 n) for m cells and n sensors. Infeasible when m > n.
///
/// Throws InvalidInput on NaN or infinite entries.
AssignmentResult min_cost_assignment(const CostMatrix& costs);

}  // namespace barrier
