#include "barrier/assignment.hpp"

#include <cmath>
#include <limits>

namespace barrier {

AssignmentResult min_cost_assignment(const CostMatrix& costs) {
  const std::size_t n = costs.sensors();
  const std::size_t m = costs.cells();
  if (n == 0 || m == 0) throw InvalidInput("cost matrix must be non-empty");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!std::isfinite(costs(i, j))) throw InvalidInput("cost matrix entries must be finite");
    }
  }

  AssignmentResult result;
  if (m > n) return result;

  // Rows are cells, columns are sensors; index 0 is the virtual column.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(m + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t row = 1; row <= m; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const std::size_t row0 = match[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double reduced = costs(col - 1, row0 - 1) - u[row0] - v[col];
        if (reduced < minv[col]) {
          minv[col] = reduced;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  result.assignment.assign(m, 0);
  for (std::size_t col = 1; col <= n; ++col) {
    if (match[col] != 0) result.assignment[match[col] - 1] = col - 1;
  }
  result.total_cost = 0.0;
  for (std::size_t cell = 0; cell < m; ++cell) {
    result.total_cost += costs(result.assignment[cell], cell);
  }
  result.feasible = true;
  return result;
}

}  // namespace barrier
