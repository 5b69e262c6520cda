#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "barrier/cell_partition.hpp"
#include "barrier/core_model.hpp"
#include "barrier/grid_scheme.hpp"
#include "barrier/opc_dp.hpp"

namespace barrier {

struct SolverConfig {
  double eps = 0.1;
  EndpointPolicy endpoint_policy = EndpointPolicy::touching;
  YWindow y_window = YWindow::symmetric;
  Eligibility eligibility = Eligibility::rectangle;
  bool parallel_grid = false;
  std::optional<std::uint64_t> seed;  // for test-side shuffling; solvers ignore it

  void validate() const;
};

enum class Winner { grid, dp, none };

std::string_view to_string(Winner winner);

struct GridSummary {
  bool feasible = false;
  double cost = 0.0;
  double best_delta = 0.0;
  std::size_t subproblems_solved = 0;
};

struct DPSummary {
  bool feasible = false;
  double cost = 0.0;
  std::size_t k_star = 0;
  double l_star = 0.0;
  std::size_t levels = 0;
  std::size_t pieces = 0;
};

struct SolveReport {
  Solution best;
  Solution grid_solution;
  Solution dp_solution;
  GridSummary grid;
  DPSummary dp;
  double grid_seconds = 0.0;
  double dp_seconds = 0.0;
  Winner winner = Winner::none;
  std::string diagnosis;  // set when no arm finds a cover
};

/// Runs the grid arm and the DP arm and keeps the cheaper cover; ties go to
/// the grid arm. Expects a normalized instance.
SolveReport solve_fptas(const Instance& instance, const SolverConfig& config);

/// Validation settings matching how a solution was produced.
ValidationOptions validation_options_for(EndpointPolicy policy, double tol = 1e-9);

}  // namespace barrier
