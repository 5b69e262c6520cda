#include "barrier/cell_partition.hpp"

#include <algorithm>
#include <cmath>

namespace barrier {

namespace {

// Absorbs rounding in (L - Δ)/2 so that e.g. L = 4.2, Δ = 0.2 gives 3 cells.
constexpr double kCountSlack = 1e-12;

}  // namespace

std::size_t cell_count(double barrier_length, double delta) {
  if (delta >= barrier_length) return 1;
  const double rest = (barrier_length - delta) / 2.0;
  return 1 + static_cast<std::size_t>(std::ceil(rest - kCountSlack * std::max(1.0, rest)));
}

CellPartition build_cells(double barrier_length, double delta) {
  if (!(barrier_length > 0.0) || !std::isfinite(barrier_length)) {
    throw InvalidInput("barrier length must be positive");
  }
  if (!(delta > 0.0 && delta <= 2.0)) {
    throw InvalidInput("first-cell length must lie in (0, 2]");
  }
  CellPartition partition;
  partition.delta = delta;
  const std::size_t m = cell_count(barrier_length, delta);
  partition.cells.reserve(m);
  partition.targets.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double left = j == 0 ? 0.0 : delta + 2.0 * static_cast<double>(j - 1);
    const double right = std::min(delta + 2.0 * static_cast<double>(j), barrier_length);
    partition.cells.push_back({left, right});
    partition.targets.push_back(delta - 1.0 + 2.0 * static_cast<double>(j));
  }
  return partition;
}

CostMatrix::CostMatrix(std::size_t sensors, std::size_t cells, EndpointPolicy policy)
    : sensors_(sensors), cells_(cells), policy_(policy), entries_(sensors * cells, 0.0) {}

double target_position(const Instance& instance, const CellPartition& partition,
                       std::size_t cell, Point sensor, EndpointPolicy policy) {
  const std::size_t m = partition.size();
  if (policy == EndpointPolicy::touching) return partition.targets.at(cell);

  const double length = instance.barrier_length();
  if (m == 1) {
    // Any center in [L-1, 1] covers [0, L]; non-empty because L <= Δ <= 2.
    return std::clamp(sensor.x, length - 1.0, 1.0);
  }
  if (cell == 0) return std::clamp(sensor.x, partition.delta - 1.0, 1.0);
  if (cell + 1 == m) {
    const double left = partition.cells[cell].left;
    return std::clamp(sensor.x, length - 1.0, left + 1.0);
  }
  return partition.targets.at(cell);
}

CostMatrix cost_matrix(const Instance& instance, const CellPartition& partition,
                       EndpointPolicy policy) {
  CostMatrix costs(instance.size(), partition.size(), policy);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Point p = instance.sensor(i);
    for (std::size_t j = 0; j < partition.size(); ++j) {
      costs(i, j) = distance_to_line_point(p, target_position(instance, partition, j, p, policy));
    }
  }
  return costs;
}

}  // namespace barrier
