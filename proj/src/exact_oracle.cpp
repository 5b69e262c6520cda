#include "barrier/exact_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "barrier/numeric.hpp"

namespace barrier {

namespace {

constexpr double kOffsetTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

double distance_to_segment(Point p, double lo, double hi) {
  return distance_to_line_point(p, std::clamp(p.x, lo, hi));
}

// Depth-first branch and bound over ordered K-tuples for one chain length.
class TupleSearch {
public:
  TupleSearch(const Instance& instance, std::size_t chain_length, double upper_bound,
              std::atomic<double>* shared_bound = nullptr)
      : instance_(instance),
        k_(chain_length),
        range_(offset_range(instance.barrier_length(), chain_length)),
        lower_(instance.size() * chain_length),
        used_(instance.size(), 0),
        best_cost_(upper_bound),
        shared_bound_(shared_bound) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const double shift = 2.0 * static_cast<double>(j);
        lower_[i * k_ + j] =
            distance_to_segment(instance.sensor(i), range_.lo + shift, range_.hi + shift);
      }
    }
    current_.reserve(k_);
  }

  void run() { extend(0.0); }

  void run_from(std::size_t first) {
    used_[first] = 1;
    current_.push_back(first);
    extend(lower_[first * k_]);
    current_.pop_back();
    used_[first] = 0;
  }

  bool found() const { return !best_slots_.empty(); }
  double best_cost() const { return best_cost_; }
  double best_offset() const { return best_offset_; }
  const std::vector<std::size_t>& best_slots() const { return best_slots_; }

private:
  double bound() const {
    return shared_bound_ ? std::min(best_cost_, shared_bound_->load(std::memory_order_relaxed))
                         : best_cost_;
  }

  void publish(double cost) {
    if (!shared_bound_) return;
    double seen = shared_bound_->load(std::memory_order_relaxed);
    while (cost < seen && !shared_bound_->compare_exchange_weak(seen, cost, std::memory_order_relaxed)) {
    }
  }

  void extend(double partial) {
    if (partial >= bound()) return;
    const std::size_t slot = current_.size();
    if (slot == k_) {
      const Minimum m = minimize_convex(
          [&](double t) { return chain_cost(instance_, current_, t); }, range_.lo, range_.hi,
          kOffsetTol);
      if (m.value < bound()) {
        best_cost_ = m.value;
        best_offset_ = m.arg;
        best_slots_ = current_;
        publish(m.value);
      }
      return;
    }
    for (std::size_t i = 0; i < instance_.size(); ++i) {
      if (used_[i]) continue;
      used_[i] = 1;
      current_.push_back(i);
      extend(partial + lower_[i * k_ + slot]);
      current_.pop_back();
      used_[i] = 0;
    }
  }

  const Instance& instance_;
  std::size_t k_;
  Interval range_;
  std::vector<double> lower_;
  std::vector<char> used_;
  std::vector<std::size_t> current_;
  double best_cost_;
  std::atomic<double>* shared_bound_;
  double best_offset_ = 0.0;
  std::vector<std::size_t> best_slots_;
};

void check_oracle_input(const Instance& instance, std::size_t max_n) {
  if (instance.radius() != 1.0) throw InvalidInput("oracle expects a normalized instance");
  if (instance.size() > max_n) {
    throw InvalidInput("oracle refuses n = " + std::to_string(instance.size()) +
                       " (limit " + std::to_string(max_n) + ")");
  }
}

OracleResult make_result(const Instance& instance, double cost, double offset,
                         std::vector<std::size_t> slots) {
  OracleResult result;
  if (slots.empty()) {
    result.solution = Solution::infeasible(Method::oracle);
    return result;
  }
  result.feasible = true;
  result.cost = cost;
  result.chain_offset = offset;
  result.slots = std::move(slots);
  Solution& s = result.solution;
  s.method = Method::oracle;
  s.feasible = true;
  for (std::size_t j = 0; j < result.slots.size(); ++j) {
    s.placements.push_back({result.slots[j], offset + 2.0 * static_cast<double>(j)});
  }
  s.cost = cover_cost(instance, s);
  return result;
}

}  // namespace

std::vector<std::size_t> OracleResult::circles() const {
  std::vector<std::size_t> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::vector<std::size_t> admissible_chain_lengths(double barrier_length, std::size_t sensors) {
  std::vector<std::size_t> lengths;
  const double half = barrier_length / 2.0;
  auto k = static_cast<std::size_t>(std::max(1.0, std::ceil(half - 1e-12 * std::max(1.0, half))));
  for (; static_cast<double>(k) < half + 2.0 && k <= sensors; ++k) lengths.push_back(k);
  return lengths;
}

Interval offset_range(double barrier_length, std::size_t chain_length) {
  const double lo = std::max(-1.0, barrier_length + 1.0 - 2.0 * static_cast<double>(chain_length));
  // A chain of exactly L/2 circles leaves a single offset; keep it despite rounding.
  return {std::min(lo, 1.0), 1.0};
}

double chain_cost(const Instance& instance, std::span<const std::size_t> slots, double offset) {
  double total = 0.0;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    total += distance_to_line_point(instance.sensor(slots[j]), offset + 2.0 * static_cast<double>(j));
  }
  return total;
}

OracleResult solve_exact(const Instance& instance, std::size_t max_n) {
  check_oracle_input(instance, max_n);
  double best_cost = kInf;
  double best_offset = 0.0;
  std::vector<std::size_t> best_slots;
  for (std::size_t k : admissible_chain_lengths(instance.barrier_length(), instance.size())) {
    TupleSearch search(instance, k, best_cost);
    search.run();
    if (search.found()) {
      best_cost = search.best_cost();
      best_offset = search.best_offset();
      best_slots = search.best_slots();
    }
  }
  return make_result(instance, best_cost, best_offset, std::move(best_slots));
}

OracleResult solve_exact_parallel(const Instance& instance, std::size_t max_n) {
  check_oracle_input(instance, max_n);
  struct Branch {
    std::size_t k = 0;
    std::size_t first = 0;
    bool found = false;
    double cost = kInf;
    double offset = 0.0;
    std::vector<std::size_t> slots;
  };
  std::vector<Branch> branches;
  for (std::size_t k : admissible_chain_lengths(instance.barrier_length(), instance.size())) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      Branch branch;
      branch.k = k;
      branch.first = i;
      branches.push_back(std::move(branch));
    }
  }

  // Branches share the incumbent cost so each one prunes like the serial search.
  std::atomic<double> incumbent{kInf};
  const auto count = static_cast<std::ptrdiff_t>(branches.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t b = 0; b < count; ++b) {
    Branch& branch = branches[static_cast<std::size_t>(b)];
    TupleSearch search(instance, branch.k, kInf, &incumbent);
    search.run_from(branch.first);
    if (search.found()) {
      branch.found = true;
      branch.cost = search.best_cost();
      branch.offset = search.best_offset();
      branch.slots = search.best_slots();
    }
  }

  // Reduced in branch order. The cost matches the serial search; with a shared
  // bound an exact tie may land on a different tuple.
  const Branch* best = nullptr;
  for (const Branch& branch : branches) {
    if (branch.found && (best == nullptr || branch.cost < best->cost)) best = &branch;
  }
  if (best == nullptr) return make_result(instance, kInf, 0.0, {});
  return make_result(instance, best->cost, best->offset, best->slots);
}

}  // namespace barrier
