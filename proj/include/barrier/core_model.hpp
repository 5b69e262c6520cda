#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace barrier {

/// Raised for malformed instances, parameters and solutions.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

/// Distance from p to the point (x, 0) on the barrier line.
double distance_to_line_point(Point p, double x);

/// A barrier [0, L] on the x-axis and n equal circles of radius r.
///
/// Sensors are stored sorted by x ascending, ties by y, then by input
/// position. All sensor indices used elsewhere refer to this order.
class Instance {
public:
  Instance(double barrier_length, double radius, std::vector<Point> sensors);

  double barrier_length() const { return barrier_length_; }
  double radius() const { return radius_; }
  const std::vector<Point>& sensors() const { return sensors_; }
  const Point& sensor(std::size_t i) const { return sensors_.at(i); }
  std::size_t size() const { return sensors_.size(); }

private:
  double barrier_length_;
  double radius_;
  std::vector<Point> sensors_;
};

/// Rescales coordinates and barrier length by 1/r so the radius becomes 1.
Instance normalize(const Instance& instance);

enum class Method { grid, dp, combined, oracle };

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);

struct Placement {
  std::size_t sensor = 0;  // 0-based, sorted order
  double x = 0.0;          // final center abscissa on the barrier line
};

struct Solution {
  std::vector<Placement> placements;  // sorted by x
  double cost = 0.0;
  Method method = Method::combined;
  std::optional<double> delta;  // first-cell length, grid arm only
  bool feasible = false;

  static Solution infeasible(Method method);
};

/// Multiplies every final abscissa and the cost by `factor`. Used to map a
/// solution between normalized and original units.
Solution scale_solution(Solution solution, double factor);

/// Sum of movement distances of the placed sensors. Unplaced sensors stay put.
double cover_cost(const Instance& instance, const std::vector<Placement>& placements);
double cover_cost(const Instance& instance, const Solution& solution);

struct ValidationReport {
  bool covers_barrier = false;
  bool touching_ok = false;
  bool order_preserving = false;
  double max_gap = 0.0;
  double worst_spacing_error = 0.0;

  bool ok() const { return covers_barrier && touching_ok; }
};

struct ValidationOptions {
  double tol = 1e-9;
  // Clamped end cells do not have to touch their neighbour.
  bool waive_end_spacing = false;
};

/// Checks coverage of [0, L], the touching-chain spacing 2r and the order
/// preserving property. Never throws on geometric defects; those are
/// reported through the flags.
ValidationReport validate_cover(const Instance& instance, const Solution& solution,
                                ValidationOptions options = {});

}  // namespace barrier
