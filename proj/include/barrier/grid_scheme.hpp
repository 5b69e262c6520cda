#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "barrier/assignment.hpp"
#include "barrier/cell_partition.hpp"
#include "barrier/core_model.hpp"

namespace barrier {

struct DeltaCost {
  double delta = 0.0;
  bool feasible = false;
  double cost = 0.0;  // W(delta) when feasible
};

struct GridResult {
  Solution best;
  double best_delta = 0.0;
  std::size_t subproblems_solved = 0;
  std::vector<DeltaCost> per_delta_costs;  // filled only on request
};

struct GridOptions {
  double eps = 0.1;
  EndpointPolicy policy = EndpointPolicy::touching;
  bool parallel = false;
  bool keep_per_delta = false;
};

/// Number of grid points ceil(2 / eps^2).
std::size_t grid_size(double eps);

/// Candidate first-cell lengths eps^2 k, k = 1..grid_size(eps). The last
/// point is exactly 2.
std::vector<double> grid_deltas(double eps);

/// One assignment subproblem: cells for `delta`, the cost matrix, and W(delta).
struct DeltaOutcome {
  CellPartition partition;
  AssignmentResult assignment;
};
DeltaOutcome evaluate_delta(const Instance& instance, double delta, EndpointPolicy policy);

/// Best cover over an explicit candidate list. The serial version is the
/// reference; the OpenMP version must produce an identical result.
GridResult solve_deltas_serial(const Instance& instance, std::span<const double> deltas,
                               EndpointPolicy policy, bool keep_per_delta = false);
GridResult solve_deltas_parallel(const Instance& instance, std::span<const double> deltas,
                                 EndpointPolicy policy, bool keep_per_delta = false);

/// Enumerates the eps^2 grid on (0, 2]. Expects a normalized instance.
GridResult solve_grid(const Instance& instance, const GridOptions& options);

}  // namespace barrier
