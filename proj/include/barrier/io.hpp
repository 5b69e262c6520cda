#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "barrier/cell_partition.hpp"
#include "barrier/core_model.hpp"

namespace barrier::io {

inline constexpr int kInstanceVersion = 1;

/// On-disk instance: {"version": 1, "L": ..., "radius": 1, "sensors": [[x, y], ...]}.
struct InstanceFile {
  int version = kInstanceVersion;
  double barrier_length = 0.0;
  double radius = 1.0;
  std::vector<Point> sensors;
};

/// On-disk solution. Sensor indices are 1-based in the file and refer to the
/// sensors sorted by (x, y, file position); they are 0-based in memory.
struct SolutionFile {
  Solution solution;
  std::optional<double> epsilon;
  EndpointPolicy endpoint_policy = EndpointPolicy::touching;
  std::optional<std::string> winner;
  std::optional<ValidationReport> diagnostics;
};

InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InstanceFile& file);

SolutionFile solution_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SolutionFile& file);

Instance to_instance(const InstanceFile& file);
InstanceFile to_file(const Instance& instance);

std::string_view to_string(EndpointPolicy policy);
EndpointPolicy endpoint_policy_from_string(std::string_view name);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string dump(const nlohmann::json& j);

/// Uniform random instance in [-1, L + 1] x [-h, h].
///
/// Uses std::mt19937_64 (its output sequence is fixed by the C++ standard)
/// and maps the top 53 bits of each draw to [0, 1); x is drawn before y for
/// every sensor. No std distribution is involved, so files are identical on
/// every platform.
InstanceFile generate(std::size_t count, double barrier_length, double height_band,
                      std::uint64_t seed);

/// Initial circles dashed, final cover solid, arrows for the moves and the
/// barrier drawn as a thick segment. Works in the instance's own units.
std::string render_svg(const Instance& instance, const Solution& solution);

}  // namespace barrier::io
