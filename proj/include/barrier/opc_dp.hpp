#pragma once

// Exact optimal order preserving cover for the regime where every
// participating circle stays inside an eps-window around its final center.
//
// A chain of k touching circles whose right end is at l has its k-th center
// at l - 1, so l is the single continuous state. Level k of the forward pass
// stores, as a sorted list of l-intervals ("pieces"), which circle is the
// cheapest eligible one for cell k and which piece of level k - 1 continues
// the chain at l - 2. The value S_k(l) is never tabulated; it is the sum of
// the distances along the parent chain and is evaluated on demand.

#include <cstddef>
#include <optional>
#include <vector>

#include "barrier/core_model.hpp"

namespace barrier {

/// Which side(s) of the barrier line a sensor may start from in the window.
enum class YWindow { symmetric, paper_literal };

/// Shape of the window: the axis-aligned eps box, or the eps disk.
enum class Eligibility { rectangle, disk };

struct OpcOptions {
  double eps = 0.1;
  YWindow y_window = YWindow::symmetric;
  Eligibility eligibility = Eligibility::rectangle;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// l-range of level k, (2(k-1), 2k] clipped to (0, L + 2). Endpoints are
/// returned as a closed pair; the lower one is open.
Interval level_domain(std::size_t k, double barrier_length);

/// Values of l at which `sensor` may serve as the k-th circle, or nothing.
std::optional<Interval> eligibility_interval(Point sensor, std::size_t k, double barrier_length,
                                             const OpcOptions& options);

/// The l where the distances from a and b to (l - 1, 0) coincide. Absent
/// when a.x == b.x.
std::optional<double> crossing_point(Point a, Point b);

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t circle = 0;
  std::size_t parent = kNoParent;  // index into the previous level's pieces
};

struct DPLevel {
  std::size_t k = 0;
  std::vector<Piece> pieces;  // disjoint, sorted by lo
};

/// Levels 1..K_max. Stops early at the first empty level. Expects a
/// normalized instance.
std::vector<DPLevel> forward_recursion(const Instance& instance, const OpcOptions& options);

/// S_k(l) on one piece of level k (1-based k), following parent links.
double chain_value(const Instance& instance, const std::vector<DPLevel>& levels, std::size_t k,
                   std::size_t piece, double l);

struct BestChain {
  bool feasible = false;
  std::size_t k = 0;
  double l = 0.0;
  std::size_t piece = 0;
  double cost = 0.0;
};

/// Minimizes S_K(l) over K and l in [L, L + 2).
BestChain extract_best(const Instance& instance, const std::vector<DPLevel>& levels);

/// Walks parent links from the winning piece and places each chain circle.
Solution backward_reconstruct(const Instance& instance, const std::vector<DPLevel>& levels,
                              const BestChain& best);

struct DPResult {
  bool feasible = false;
  double best_cost = 0.0;
  std::size_t k_star = 0;
  double l_star = 0.0;
  double last_cell_overhang = 0.0;  // l* - L
  std::size_t levels = 0;
  std::size_t pieces = 0;
  Solution solution;
};

DPResult solve_opc(const Instance& instance, const OpcOptions& options);

}  // namespace barrier
