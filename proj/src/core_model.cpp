#include "barrier/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace barrier {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double distance_to_line_point(Point p, double x) { return std::hypot(p.x - x, p.y); }

Instance::Instance(double barrier_length, double radius, std::vector<Point> sensors)
    : barrier_length_(barrier_length), radius_(radius) {
  if (!std::isfinite(barrier_length) || barrier_length <= 0.0) {
    throw InvalidInput("barrier length must be a positive finite number");
  }
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InvalidInput("radius must be a positive finite number");
  }
  if (sensors.empty()) {
    throw InvalidInput("instance needs at least one sensor");
  }
  for (const Point& p : sensors) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidInput("sensor coordinates must be finite");
    }
  }
  // Stable sort keeps input order as the final tie-breaker.
  std::stable_sort(sensors.begin(), sensors.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  sensors_ = std::move(sensors);
}

Instance normalize(const Instance& instance) {
  const double r = instance.radius();
  if (r == 1.0) return instance;
  std::vector<Point> scaled;
  scaled.reserve(instance.size());
  for (const Point& p : instance.sensors()) scaled.push_back({p.x / r, p.y / r});
  return Instance(instance.barrier_length() / r, 1.0, std::move(scaled));
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::grid: return "grid";
    case Method::dp: return "dp";
    case Method::combined: return "combined";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "grid") return Method::grid;
  if (name == "dp") return Method::dp;
  if (name == "combined") return Method::combined;
  if (name == "oracle") return Method::oracle;
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

Solution Solution::infeasible(Method method) {
  Solution s;
  s.method = method;
  s.feasible = false;
  return s;
}

Solution scale_solution(Solution solution, double factor) {
  for (Placement& p : solution.placements) p.x *= factor;
  solution.cost *= factor;
  if (solution.delta) *solution.delta *= factor;
  return solution;
}

double cover_cost(const Instance& instance, const std::vector<Placement>& placements) {
  std::vector<bool> seen(instance.size(), false);
  double total = 0.0;
  for (const Placement& p : placements) {
    if (p.sensor >= instance.size()) {
      throw InvalidInput("placement refers to sensor " + std::to_string(p.sensor) +
                         " but the instance has " + std::to_string(instance.size()));
    }
    if (seen[p.sensor]) {
      throw InvalidInput("sensor " + std::to_string(p.sensor) + " placed twice");
    }
    seen[p.sensor] = true;
    total += distance_to_line_point(instance.sensor(p.sensor), p.x);
  }
  return total;
}

double cover_cost(const Instance& instance, const Solution& solution) {
  return cover_cost(instance, solution.placements);
}

ValidationReport validate_cover(const Instance& instance, const Solution& solution,
                                ValidationOptions options) {
  const double r = instance.radius();
  const double length = instance.barrier_length();

  std::vector<Placement> sorted = solution.placements;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Placement& a, const Placement& b) { return a.x < b.x; });

  ValidationReport report;

  // Largest uncovered stretch of [0, L].
  double covered_to = 0.0;
  double max_gap = 0.0;
  for (const Placement& p : sorted) {
    const double lo = p.x - r;
    const double hi = p.x + r;
    if (lo > covered_to) {
      max_gap = std::max(max_gap, std::min(lo, length) - covered_to);
    }
    covered_to = std::max(covered_to, hi);
    if (covered_to >= length) break;
  }
  if (covered_to < length) max_gap = std::max(max_gap, length - covered_to);
  report.max_gap = max_gap;
  report.covers_barrier = !sorted.empty() && max_gap <= options.tol;

  double worst = 0.0;
  const std::size_t pairs = sorted.size() > 1 ? sorted.size() - 1 : 0;
  for (std::size_t k = 0; k < pairs; ++k) {
    if (options.waive_end_spacing && (k == 0 || k + 1 == pairs)) continue;
    worst = std::max(worst, std::abs(sorted[k + 1].x - sorted[k].x - 2.0 * r));
  }
  report.worst_spacing_error = worst;
  report.touching_ok = worst <= options.tol;

  report.order_preserving = std::adjacent_find(sorted.begin(), sorted.end(),
                                               [](const Placement& a, const Placement& b) {
                                                 return a.sensor >= b.sensor;
                                               }) == sorted.end();
  return report;
}

}  // namespace barrier
