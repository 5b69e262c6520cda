#include "barrier/solver_driver.hpp"

#include <chrono>
#include <cmath>

namespace barrier {

namespace {

template <typename F>
auto timed(double& seconds, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");
}

std::string_view to_string(Winner winner) {
  switch (winner) {
    case Winner::grid: return "grid";
    case Winner::dp: return "dp";
    case Winner::none: return "none";
  }
  return "none";
}

ValidationOptions validation_options_for(EndpointPolicy policy, double tol) {
  return {tol, policy == EndpointPolicy::clamped};
}

SolveReport solve_fptas(const Instance& instance, const SolverConfig& config) {
  config.validate();
  if (instance.radius() != 1.0) throw InvalidInput("solver expects a normalized instance");

  SolveReport report;
  const GridResult grid = timed(report.grid_seconds, [&] {
    return solve_grid(instance, {config.eps, config.endpoint_policy, config.parallel_grid, false});
  });
  const DPResult dp = timed(report.dp_seconds, [&] {
    return solve_opc(instance, {config.eps, config.y_window, config.eligibility});
  });

  report.grid = {grid.best.feasible, grid.best.cost, grid.best_delta, grid.subproblems_solved};
  report.dp = {dp.feasible, dp.solution.cost, dp.k_star, dp.l_star, dp.levels, dp.pieces};
  report.grid_solution = grid.best;
  report.dp_solution = dp.solution;

  if (grid.best.feasible && (!dp.feasible || grid.best.cost <= dp.solution.cost)) {
    report.winner = Winner::grid;
    report.best = grid.best;
  } else if (dp.feasible) {
    report.winner = Winner::dp;
    report.best = dp.solution;
  } else {
    report.winner = Winner::none;
    report.best = Solution::infeasible(Method::combined);
    const auto needed = static_cast<std::size_t>(
        std::max(1.0, std::ceil(instance.barrier_length() / 2.0 - 1e-12)));
    report.diagnosis = "no cover: " + std::to_string(instance.size()) +
                       " sensor(s) but a touching chain needs at least " + std::to_string(needed);
  }
  report.best.method = Method::combined;
  return report;
}

}  // namespace barrier
