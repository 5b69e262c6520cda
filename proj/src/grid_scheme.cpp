#include "barrier/grid_scheme.hpp"

#include <algorithm>
#include <cmath>

namespace barrier {

namespace {

void check_deltas(std::span<const double> deltas) {
  if (deltas.empty()) throw InvalidInput("no first-cell lengths to evaluate");
  for (double d : deltas) {
    if (!(d > 0.0 && d <= 2.0)) throw InvalidInput("first-cell length must lie in (0, 2]");
  }
}

DeltaCost delta_cost(const Instance& instance, double delta, EndpointPolicy policy) {
  // Skip building the matrix when the pigeonhole bound already fails.
  if (cell_count(instance.barrier_length(), delta) > instance.size()) {
    return {delta, false, 0.0};
  }
  const DeltaOutcome outcome = evaluate_delta(instance, delta, policy);
  return {delta, outcome.assignment.feasible, outcome.assignment.total_cost};
}

// (cost, delta) lexicographic minimum in candidate order.
GridResult reduce(const Instance& instance, std::span<const double> deltas,
                  std::vector<DeltaCost> costs, EndpointPolicy policy, bool keep_per_delta) {
  GridResult result;
  result.subproblems_solved = deltas.size();
  std::size_t best = costs.size();
  for (std::size_t k = 0; k < costs.size(); ++k) {
    if (!costs[k].feasible) continue;
    if (best == costs.size() || costs[k].cost < costs[best].cost ||
        (costs[k].cost == costs[best].cost && costs[k].delta < costs[best].delta)) {
      best = k;
    }
  }

  if (best == costs.size()) {
    result.best = Solution::infeasible(Method::grid);
  } else {
    const double delta = costs[best].delta;
    const DeltaOutcome outcome = evaluate_delta(instance, delta, policy);
    Solution& s = result.best;
    s.method = Method::grid;
    s.feasible = true;
    s.delta = delta;
    for (std::size_t cell = 0; cell < outcome.partition.size(); ++cell) {
      const std::size_t sensor = outcome.assignment.assignment[cell];
      s.placements.push_back(
          {sensor, target_position(instance, outcome.partition, cell, instance.sensor(sensor), policy)});
    }
    std::stable_sort(s.placements.begin(), s.placements.end(),
                     [](const Placement& a, const Placement& b) { return a.x < b.x; });
    s.cost = cover_cost(instance, s);
    result.best_delta = delta;
  }
  if (keep_per_delta) result.per_delta_costs = std::move(costs);
  return result;
}

}  // namespace

std::size_t grid_size(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");
  const double steps = 2.0 / (eps * eps);
  return static_cast<std::size_t>(std::ceil(steps - 1e-9 * steps));
}

std::vector<double> grid_deltas(double eps) {
  const std::size_t count = grid_size(eps);
  const double step = eps * eps;
  std::vector<double> deltas(count);
  for (std::size_t k = 0; k < count; ++k) {
    deltas[k] = std::min(step * static_cast<double>(k + 1), 2.0);
  }
  deltas.back() = 2.0;
  return deltas;
}

DeltaOutcome evaluate_delta(const Instance& instance, double delta, EndpointPolicy policy) {
  DeltaOutcome outcome;
  outcome.partition = build_cells(instance.barrier_length(), delta);
  outcome.assignment = min_cost_assignment(cost_matrix(instance, outcome.partition, policy));
  return outcome;
}

GridResult solve_deltas_serial(const Instance& instance, std::span<const double> deltas,
                               EndpointPolicy policy, bool keep_per_delta) {
  check_deltas(deltas);
  std::vector<DeltaCost> costs(deltas.size());
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    costs[k] = delta_cost(instance, deltas[k], policy);
  }
  return reduce(instance, deltas, std::move(costs), policy, keep_per_delta);
}

GridResult solve_deltas_parallel(const Instance& instance, std::span<const double> deltas,
                                 EndpointPolicy policy, bool keep_per_delta) {
  check_deltas(deltas);
  std::vector<DeltaCost> costs(deltas.size());
  const auto count = static_cast<std::ptrdiff_t>(deltas.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    costs[idx] = delta_cost(instance, deltas[idx], policy);
  }
  return reduce(instance, deltas, std::move(costs), policy, keep_per_delta);
}

GridResult solve_grid(const Instance& instance, const GridOptions& options) {
  if (instance.radius() != 1.0) throw InvalidInput("grid solver expects a normalized instance");
  const std::vector<double> deltas = grid_deltas(options.eps);
  return options.parallel
             ? solve_deltas_parallel(instance, deltas, options.policy, options.keep_per_delta)
             : solve_deltas_serial(instance, deltas, options.policy, options.keep_per_delta);
}

}  // namespace barrier
