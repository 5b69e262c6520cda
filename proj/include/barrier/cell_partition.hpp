#pragma once

#include <cstddef>
#include <vector>

#include "barrier/core_model.hpp"

namespace barrier {

/// How the end cells pick their circle centers.
///  - touching: every center sits on the chain Δ-1, Δ+1, ...
///  - clamped: the first/last center is the point nearest the sensor among
///    the centers that still cover the end cell.
enum class EndpointPolicy { touching, clamped };

struct Cell {
  double left = 0.0;
  double right = 0.0;
};

struct CellPartition {
  double delta = 0.0;
  std::vector<Cell> cells;
  std::vector<double> targets;  // chain centers Δ-1 + 2j

  std::size_t size() const { return cells.size(); }
};

/// Number of cells for first-cell length `delta` on a barrier of length L.
std::size_t cell_count(double barrier_length, double delta);

CellPartition build_cells(double barrier_length, double delta);

/// n x m matrix of movement costs, rows are sensors and columns are cells.
class CostMatrix {
public:
  CostMatrix(std::size_t sensors, std::size_t cells, EndpointPolicy policy);

  std::size_t sensors() const { return sensors_; }
  std::size_t cells() const { return cells_; }
  EndpointPolicy policy() const { return policy_; }

  double operator()(std::size_t sensor, std::size_t cell) const {
    return entries_[sensor * cells_ + cell];
  }
  double& operator()(std::size_t sensor, std::size_t cell) {
    return entries_[sensor * cells_ + cell];
  }

private:
  std::size_t sensors_;
  std::size_t cells_;
  EndpointPolicy policy_;
  std::vector<double> entries_;
};

/// Final center abscissa for `sensor` covering cell `cell` of the partition.
double target_position(const Instance& instance, const CellPartition& partition,
                       std::size_t cell, Point sensor, EndpointPolicy policy);

/// Expects a normalized instance (radius 1).
CostMatrix cost_matrix(const Instance& instance, const CellPartition& partition,
                       EndpointPolicy policy = EndpointPolicy::touching);

}  // namespace barrier
