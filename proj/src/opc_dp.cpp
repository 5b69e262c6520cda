#include "barrier/opc_dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "barrier/numeric.hpp"

namespace barrier {

namespace {

constexpr double kArgTol = 1e-10;

void check_options(const OpcOptions& options) {
  if (!(options.eps > 0.0 && options.eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");
}

void append_merged(std::vector<Piece>& pieces, const Piece& piece) {
  if (!pieces.empty()) {
    Piece& back = pieces.back();
    if (back.circle == piece.circle && back.parent == piece.parent && back.hi == piece.lo) {
      back.hi = piece.hi;
      return;
    }
  }
  pieces.push_back(piece);
}

struct Window {
  std::size_t sensor;
  Interval range;
};

// Lower envelope of the d_i over [a, b] for sensors all eligible on [a, b].
// Minimizing d_i(l) is minimizing d_i(l)^2, and after dropping the common
// (l - 1)^2 term these are lines in l with slope -2 x_i, so the envelope is a
// lower hull ordered by x.
void envelope_on_span(const Instance& instance, const std::vector<std::size_t>& active, double a,
                      double b, std::vector<Piece>& out) {
  std::vector<std::size_t> lines;
  lines.reserve(active.size());
  for (std::size_t idx : active) {
    if (!lines.empty() && instance.sensor(lines.back()).x == instance.sensor(idx).x) {
      // Same abscissa: the smaller |y| is below everywhere, ties keep the lower index.
      if (std::abs(instance.sensor(idx).y) < std::abs(instance.sensor(lines.back()).y)) {
        lines.back() = idx;
      }
      continue;
    }
    lines.push_back(idx);
  }

  std::vector<std::size_t> hull;
  hull.reserve(lines.size());
  for (std::size_t idx : lines) {
    while (hull.size() >= 2) {
      const Point p0 = instance.sensor(hull[hull.size() - 2]);
      const Point p1 = instance.sensor(hull.back());
      const Point p2 = instance.sensor(idx);
      if (*crossing_point(p0, p2) <= *crossing_point(p0, p1)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(idx);
  }

  double left = -std::numeric_limits<double>::infinity();
  for (std::size_t h = 0; h < hull.size(); ++h) {
    double right = std::numeric_limits<double>::infinity();
    if (h + 1 < hull.size()) {
      right = std::max(left, *crossing_point(instance.sensor(hull[h]), instance.sensor(hull[h + 1])));
    }
    const double lo = std::max(left, a);
    const double hi = std::min(right, b);
    if (lo < hi) append_merged(out, {lo, hi, hull[h], kNoParent});
    left = right;
  }
}

std::vector<Piece> envelope_for_level(const Instance& instance, std::size_t k,
                                      const OpcOptions& options) {
  const double length = instance.barrier_length();
  const Interval domain = level_domain(k, length);
  const auto& sensors = instance.sensors();

  // Any eligible sensor has |x - (l - 1)| <= eps for some l in the domain.
  const double x_min = domain.lo - 1.0 - options.eps;
  const double x_max = domain.hi - 1.0 + options.eps;
  auto first = std::lower_bound(sensors.begin(), sensors.end(), x_min,
                                [](const Point& p, double x) { return p.x < x; });

  std::vector<Window> windows;
  std::vector<double> events;
  for (auto it = first; it != sensors.end() && it->x <= x_max; ++it) {
    const auto idx = static_cast<std::size_t>(it - sensors.begin());
    if (auto range = eligibility_interval(*it, k, length, options)) {
      windows.push_back({idx, *range});
      events.push_back(range->lo);
      events.push_back(range->hi);
    }
  }
  std::vector<Piece> pieces;
  if (windows.empty()) return pieces;

  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<std::size_t> active;
  for (std::size_t e = 0; e + 1 < events.size(); ++e) {
    const double a = events[e];
    const double b = events[e + 1];
    active.clear();
    // Every window endpoint is an event, so a window either spans [a, b] or misses it.
    for (const Window& w : windows) {
      if (w.range.lo <= a && w.range.hi >= b) active.push_back(w.sensor);
    }
    if (!active.empty()) envelope_on_span(instance, active, a, b, pieces);
  }
  return pieces;
}

}  // namespace

Interval level_domain(std::size_t k, double barrier_length) {
  const double lo = 2.0 * static_cast<double>(k - 1);
  const double hi = std::min(2.0 * static_cast<double>(k), barrier_length + 2.0);
  return {lo, hi};
}

std::optional<Interval> eligibility_interval(Point sensor, std::size_t k, double barrier_length,
                                             const OpcOptions& options) {
  check_options(options);
  if (k == 0) throw InvalidInput("levels are numbered from 1");
  const double eps = options.eps;
  const bool y_ok = options.y_window == YWindow::symmetric
                        ? std::abs(sensor.y) <= eps
                        : (sensor.y >= 0.0 && sensor.y <= eps);
  if (!y_ok) return std::nullopt;

  const double half_width = options.eligibility == Eligibility::rectangle
                                ? eps
                                : std::sqrt(std::max(0.0, eps * eps - sensor.y * sensor.y));
  const Interval domain = level_domain(k, barrier_length);
  const double lo = std::max(sensor.x + 1.0 - half_width, domain.lo);
  const double hi = std::min(sensor.x + 1.0 + half_width, domain.hi);
  if (!(lo < hi)) return std::nullopt;
  return Interval{lo, hi};
}

std::optional<double> crossing_point(Point a, Point b) {
  if (a.x == b.x) return std::nullopt;
  return 1.0 + 0.5 * (a.x + b.x) + (b.y * b.y - a.y * a.y) / (2.0 * (b.x - a.x));
}

std::vector<DPLevel> forward_recursion(const Instance& instance, const OpcOptions& options) {
  check_options(options);
  if (instance.radius() != 1.0) throw InvalidInput("DP expects a normalized instance");

  const double length = instance.barrier_length();
  std::vector<DPLevel> levels;
  for (std::size_t k = 1; level_domain(k, length).lo < length + 2.0; ++k) {
    std::vector<Piece> envelope = envelope_for_level(instance, k, options);
    DPLevel level;
    level.k = k;
    if (k == 1) {
      level.pieces = std::move(envelope);
    } else {
      // The S_{k-1}(l - 2) term is shared by all candidates, so the argmin
      // comes from the envelope alone; pieces only split where the parent does.
      const std::vector<Piece>& parents = levels.back().pieces;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < envelope.size() && j < parents.size()) {
        const double parent_lo = parents[j].lo + 2.0;
        const double parent_hi = parents[j].hi + 2.0;
        const double lo = std::max(envelope[i].lo, parent_lo);
        const double hi = std::min(envelope[i].hi, parent_hi);
        if (lo < hi) append_merged(level.pieces, {lo, hi, envelope[i].circle, j});
        if (envelope[i].hi < parent_hi) {
          ++i;
        } else {
          ++j;
        }
      }
    }
    if (level.pieces.empty()) break;
    levels.push_back(std::move(level));
  }
  return levels;
}

double chain_value(const Instance& instance, const std::vector<DPLevel>& levels, std::size_t k,
                   std::size_t piece, double l) {
  double total = 0.0;
  double right_end = l;
  for (std::size_t level = k; level >= 1; --level) {
    const Piece& p = levels[level - 1].pieces[piece];
    total += distance_to_line_point(instance.sensor(p.circle), right_end - 1.0);
    piece = p.parent;
    right_end -= 2.0;
  }
  return total;
}

BestChain extract_best(const Instance& instance, const std::vector<DPLevel>& levels) {
  const double length = instance.barrier_length();
  BestChain best;
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    const Interval domain = level_domain(k, length);
    if (domain.hi < length) continue;
    const auto& pieces = levels[k - 1].pieces;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      const double lo = std::max(pieces[p].lo, length);
      const double hi = std::min(pieces[p].hi, length + 2.0);
      if (lo > hi || lo >= length + 2.0) continue;
      const Minimum m = minimize_convex(
          [&](double l) { return chain_value(instance, levels, k, p, l); }, lo, hi, kArgTol);
      if (!best.feasible || m.value < best.cost) {
        best = {true, k, m.arg, p, m.value};
      }
    }
  }
  return best;
}

Solution backward_reconstruct(const Instance& instance, const std::vector<DPLevel>& levels,
                              const BestChain& best) {
  if (!best.feasible) return Solution::infeasible(Method::dp);
  Solution solution;
  solution.method = Method::dp;
  solution.feasible = true;
  solution.placements.resize(best.k);
  std::size_t piece = best.piece;
  for (std::size_t level = best.k; level >= 1; --level) {
    const Piece& p = levels[level - 1].pieces[piece];
    const double x = best.l - 1.0 - 2.0 * static_cast<double>(best.k - level);
    solution.placements[level - 1] = {p.circle, x};
    piece = p.parent;
  }
  for (std::size_t j = 1; j < solution.placements.size(); ++j) {
    if (solution.placements[j - 1].sensor >= solution.placements[j].sensor) {
      throw std::logic_error("dp chain is not order preserving");
    }
  }
  solution.cost = cover_cost(instance, solution);
  return solution;
}

DPResult solve_opc(const Instance& instance, const OpcOptions& options) {
  const std::vector<DPLevel> levels = forward_recursion(instance, options);
  DPResult result;
  result.levels = levels.size();
  for (const DPLevel& level : levels) result.pieces += level.pieces.size();

  const BestChain best = extract_best(instance, levels);
  result.solution = backward_reconstruct(instance, levels, best);
  if (!best.feasible) return result;
  result.feasible = true;
  result.best_cost = best.cost;
  result.k_star = best.k;
  result.l_star = best.l;
  result.last_cell_overhang = best.l - instance.barrier_length();
  return result;
}

}  // namespace barrier
