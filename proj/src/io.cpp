#include "barrier/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace barrier::io {

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + " must be finite");
  return v;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json report_to_json(const ValidationReport& r) {
  return {{"covers_barrier", r.covers_barrier},
          {"touching_ok", r.touching_ok},
          {"order_preserving", r.order_preserving},
          {"max_gap", r.max_gap},
          {"worst_spacing_error", r.worst_spacing_error}};
}

ValidationReport report_from_json(const json& j) {
  ValidationReport r;
  r.covers_barrier = j.at("covers_barrier").get<bool>();
  r.touching_ok = j.at("touching_ok").get<bool>();
  r.order_preserving = j.at("order_preserving").get<bool>();
  r.max_gap = finite_number(j.at("max_gap"), "max_gap");
  r.worst_spacing_error = finite_number(j.at("worst_spacing_error"), "worst_spacing_error");
  return r;
}

// Top 53 bits of a 64-bit draw as a double in [0, 1).
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

InstanceFile instance_from_json(const json& j) {
  try {
    InstanceFile file;
    file.version = j.value("version", kInstanceVersion);
    if (file.version != kInstanceVersion) {
      throw InvalidInput("unsupported instance version " + std::to_string(file.version));
    }
    file.barrier_length = finite_number(j.at("L"), "L");
    if (j.contains("radius")) file.radius = finite_number(j.at("radius"), "radius");
    for (const json& s : j.at("sensors")) {
      if (!s.is_array() || s.size() != 2) throw InvalidInput("each sensor must be an [x, y] pair");
      file.sensors.push_back({finite_number(s[0], "sensor x"), finite_number(s[1], "sensor y")});
    }
    return file;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

json to_json(const InstanceFile& file) {
  json sensors = json::array();
  for (const Point& p : file.sensors) sensors.push_back({p.x, p.y});
  return {{"version", file.version},
          {"L", file.barrier_length},
          {"radius", file.radius},
          {"sensors", std::move(sensors)}};
}

SolutionFile solution_from_json(const json& j) {
  try {
    SolutionFile file;
    Solution& s = file.solution;
    s.method = method_from_string(j.at("method").get<std::string>());
    s.cost = finite_number(j.at("cost"), "cost");
    s.feasible = j.at("feasible").get<bool>();
    if (j.contains("delta") && !j.at("delta").is_null()) s.delta = finite_number(j.at("delta"), "delta");
    if (j.contains("epsilon") && !j.at("epsilon").is_null()) {
      file.epsilon = finite_number(j.at("epsilon"), "epsilon");
    }
    if (j.contains("endpoint_policy")) {
      file.endpoint_policy = endpoint_policy_from_string(j.at("endpoint_policy").get<std::string>());
    }
    if (j.contains("winner")) file.winner = j.at("winner").get<std::string>();
    if (j.contains("diagnostics") && !j.at("diagnostics").is_null()) {
      file.diagnostics = report_from_json(j.at("diagnostics"));
    }
    for (const json& p : j.at("placements")) {
      const auto sensor = p.at("sensor").get<long long>();
      if (sensor < 1) throw InvalidInput("sensor indices in solution files start at 1");
      s.placements.push_back({static_cast<std::size_t>(sensor - 1), finite_number(p.at("x"), "x")});
    }
    return file;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed solution: ") + e.what());
  }
}

json to_json(const SolutionFile& file) {
  const Solution& s = file.solution;
  json placements = json::array();
  for (const Placement& p : s.placements) placements.push_back({{"sensor", p.sensor + 1}, {"x", p.x}});
  json j = {{"method", std::string(to_string(s.method))},
            {"epsilon", optional_number(file.epsilon)},
            {"cost", s.cost},
            {"feasible", s.feasible},
            {"delta", optional_number(s.delta)},
            {"endpoint_policy", std::string(to_string(file.endpoint_policy))},
            {"placements", std::move(placements)}};
  if (file.winner) j["winner"] = *file.winner;
  j["diagnostics"] = file.diagnostics ? report_to_json(*file.diagnostics) : json(nullptr);
  return j;
}

Instance to_instance(const InstanceFile& file) {
  return Instance(file.barrier_length, file.radius, file.sensors);
}

InstanceFile to_file(const Instance& instance) {
  return {kInstanceVersion, instance.barrier_length(), instance.radius(), instance.sensors()};
}

std::string_view to_string(EndpointPolicy policy) {
  return policy == EndpointPolicy::touching ? "touching" : "clamped";
}

EndpointPolicy endpoint_policy_from_string(std::string_view name) {
  if (name == "touching") return EndpointPolicy::touching;
  if (name == "clamped") return EndpointPolicy::clamped;
  throw InvalidInput("unknown endpoint policy '" + std::string(name) + "'");
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

InstanceFile generate(std::size_t count, double barrier_length, double height_band,
                      std::uint64_t seed) {
  if (count == 0) throw InvalidInput("n must be at least 1");
  if (!(barrier_length > 0.0) || !std::isfinite(barrier_length)) {
    throw InvalidInput("L must be positive");
  }
  if (!(height_band >= 0.0) || !std::isfinite(height_band)) {
    throw InvalidInput("height band must be non-negative");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> sensors;
  sensors.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = -1.0 + (barrier_length + 2.0) * unit_draw(rng);
    const double v = unit_draw(rng);
    const double y = height_band == 0.0 ? 0.0 : -height_band + 2.0 * height_band * v;
    sensors.push_back({x, y});
  }
  return to_file(Instance(barrier_length, 1.0, std::move(sensors)));
}

std::string render_svg(const Instance& instance, const Solution& solution) {
  const double r = instance.radius();
  const double length = instance.barrier_length();

  double min_x = -r, max_x = length + r, min_y = -r, max_y = r;
  for (const Point& p : instance.sensors()) {
    min_x = std::min(min_x, p.x - r);
    max_x = std::max(max_x, p.x + r);
    min_y = std::min(min_y, p.y - r);
    max_y = std::max(max_y, p.y + r);
  }
  for (const Placement& p : solution.placements) {
    min_x = std::min(min_x, p.x - r);
    max_x = std::max(max_x, p.x + r);
  }
  const double margin = 0.25 * r;
  min_x -= margin;
  max_x += margin;
  min_y -= margin;
  max_y += margin;

  // 40 px per unit radius keeps small instances legible.
  const double scale = 40.0 / r;
  const double width = (max_x - min_x) * scale;
  const double height = (max_y - min_y) * scale;
  auto sx = [&](double x) { return (x - min_x) * scale; };
  auto sy = [&](double y) { return (max_y - y) * scale; };

  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\">\n"
      << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444444\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  out << "  <g id=\"axis\">\n"
      << "    <line x1=\"0\" y1=\"" << sy(0.0) << "\" x2=\"" << width << "\" y2=\"" << sy(0.0)
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n"
      << "    <line x1=\"" << sx(0.0) << "\" y1=\"" << sy(0.0) << "\" x2=\"" << sx(length)
      << "\" y2=\"" << sy(0.0) << "\" stroke=\"black\" stroke-width=\"4\"/>\n"
      << "  </g>\n";

  out << "  <g id=\"initial\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" "
         "stroke-dasharray=\"4 3\">\n";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Point& p = instance.sensor(i);
    out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << r * scale
        << "\"><title>sensor " << i + 1 << "</title></circle>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"cover\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"1.5\">\n";
  for (const Placement& p : solution.placements) {
    out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(0.0) << "\" r=\"" << r * scale
        << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"moves\" stroke=\"#444444\" stroke-width=\"1\">\n";
  for (const Placement& p : solution.placements) {
    if (p.sensor >= instance.size()) continue;
    const Point& from = instance.sensor(p.sensor);
    out << "    <line x1=\"" << sx(from.x) << "\" y1=\"" << sy(from.y) << "\" x2=\"" << sx(p.x)
        << "\" y2=\"" << sy(0.0) << "\"";
    if (distance_to_line_point(from, p.x) > 1e-12) out << " marker-end=\"url(#arrow)\"";
    out << "/>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace barrier::io
