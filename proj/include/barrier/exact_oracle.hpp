#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "barrier/core_model.hpp"
#include "barrier/opc_dp.hpp"

namespace barrier {

/// Ground truth for small instances.
///
/// A touching chain of K circles is fixed by the abscissa t of its first
/// center; slot j sits at t + 2j. For every admissible K and every ordered
/// K-tuple of distinct sensors (slot -> sensor) the cost is convex in t and
/// is minimized by ternary search. Ordered tuples are enumerated, not just
/// increasing ones, because the optimal slot matching of a subset need not
/// preserve the x-order. A lower bound (distance of each sensor to the
/// segment its slot sweeps) prunes the search.
struct OracleResult {
  bool feasible = false;
  double cost = 0.0;
  double chain_offset = 0.0;
  std::vector<std::size_t> slots;  // sensor per chain slot, left to right
  Solution solution;

  /// Participating sensors, ascending.
  std::vector<std::size_t> circles() const;
};

/// Chain lengths K with L/2 <= K < L/2 + 2 and K <= n. Longer chains carry
/// a redundant circle.
std::vector<std::size_t> admissible_chain_lengths(double barrier_length, std::size_t sensors);

/// Offsets t for which a K-chain covers [0, L]: [max(-1, L + 1 - 2K), 1].
Interval offset_range(double barrier_length, std::size_t chain_length);

double chain_cost(const Instance& instance, std::span<const std::size_t> slots, double offset);

/// Throws InvalidInput when n > max_n. Expects a normalized instance.
OracleResult solve_exact(const Instance& instance, std::size_t max_n = 10);

/// Same search split over (K, first slot) branches with OpenMP. The cost
/// matches solve_exact; among exact ties the chosen tuple may differ.
OracleResult solve_exact_parallel(const Instance& instance, std::size_t max_n = 10);

}  // namespace barrier
