#include "barrier/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "barrier/exact_oracle.hpp"
#include "barrier/io.hpp"
#include "barrier/solver_driver.hpp"

namespace barrier::cli {

namespace {

namespace fs = std::filesystem;

struct SolveArgs {
  std::string input;
  double eps = 0.0;
  std::string endpoint_policy = "touching";
  std::string eligibility = "rectangle";
  std::string y_window = "symmetric";
  bool parallel = false;
  std::string out;
  std::string svg;
};

struct OracleArgs {
  std::string input;
  std::size_t max_n = 10;
  std::string out;
};

struct ValidateArgs {
  std::string input;
  std::string solution;
  double tol = 1e-9;
};

struct GenArgs {
  std::size_t n = 0;
  double length = 0.0;
  double height = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct BenchArgs {
  std::string dir;
  std::vector<double> eps_list;
  std::string report;
  std::size_t max_n = 10;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
  } else {
    io::write_text(path, text);
  }
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  SolverConfig config;
  config.eps = args.eps;
  config.endpoint_policy = io::endpoint_policy_from_string(args.endpoint_policy);
  config.eligibility = args.eligibility == "disk" ? Eligibility::disk : Eligibility::rectangle;
  config.y_window = args.y_window == "paper" ? YWindow::paper_literal : YWindow::symmetric;
  config.parallel_grid = args.parallel;

  const Instance original = io::to_instance(io::instance_from_json(io::read_json(args.input)));
  const SolveReport report = solve_fptas(normalize(original), config);
  const Solution solution = scale_solution(report.best, original.radius());

  io::SolutionFile file;
  file.solution = solution;
  file.epsilon = args.eps;
  file.endpoint_policy = config.endpoint_policy;
  file.winner = std::string(to_string(report.winner));
  file.diagnostics = validate_cover(original, solution,
                                    validation_options_for(config.endpoint_policy,
                                                           1e-9 * original.radius()));
  emit(args.out, io::dump(io::to_json(file)), out);
  if (!args.svg.empty()) io::write_text(args.svg, io::render_svg(original, solution));
  if (!solution.feasible) {
    if (!args.out.empty()) out << report.diagnosis << '\n';
    return kExitInfeasible;
  }
  if (!args.out.empty()) {
    out << "cost " << solution.cost << " winner " << to_string(report.winner) << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const Instance original = io::to_instance(io::instance_from_json(io::read_json(args.input)));
  const OracleResult result = solve_exact(normalize(original), args.max_n);
  const Solution solution = scale_solution(result.solution, original.radius());

  io::SolutionFile file;
  file.solution = solution;
  file.diagnostics = validate_cover(original, solution, {1e-9 * original.radius(), false});
  emit(args.out, io::dump(io::to_json(file)), out);
  return solution.feasible ? kExitOk : kExitInfeasible;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  const Instance instance = io::to_instance(io::instance_from_json(io::read_json(args.input)));
  const io::SolutionFile file = io::solution_from_json(io::read_json(args.solution));
  const Solution& solution = file.solution;

  const ValidationReport report =
      validate_cover(instance, solution, validation_options_for(file.endpoint_policy, args.tol));
  const double recomputed = cover_cost(instance, solution);
  const bool cost_ok = std::abs(recomputed - solution.cost) <= args.tol * std::max(1.0, recomputed);
  const bool order_ok = solution.method != Method::dp || report.order_preserving;

  nlohmann::json j = {{"covers_barrier", report.covers_barrier},
                      {"touching_ok", report.touching_ok},
                      {"order_preserving", report.order_preserving},
                      {"max_gap", report.max_gap},
                      {"worst_spacing_error", report.worst_spacing_error},
                      {"cost", solution.cost},
                      {"recomputed_cost", recomputed},
                      {"cost_ok", cost_ok}};
  out << io::dump(j) << '\n';
  if (!solution.feasible) return kExitInfeasible;
  return report.ok() && cost_ok && order_ok ? kExitOk : kExitError;
}

int cmd_gen(const GenArgs& args, std::ostream&) {
  io::write_text(args.out, io::dump(io::to_json(io::generate(args.n, args.length, args.height, args.seed))));
  return kExitOk;
}

SolverConfig config_for(double eps) {
  SolverConfig config;
  config.eps = eps;
  return config;
}

double ratio(double cost, double reference) {
  if (reference > 0.0) return cost / reference;
  return cost > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidInput("no .json instances in " + args.dir);
  for (double eps : args.eps_list) config_for(eps).validate();

  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  std::ostringstream rows;
  rows.precision(6);
  rows << "| instance | n | L | eps | fptas_cost | oracle_cost | ratio | winner | fptas_ms | oracle_ms |\n"
       << "|---|---|---|---|---|---|---|---|---|---|\n";
  std::map<double, std::pair<std::size_t, double>> worst;  // eps -> (runs, max ratio)

  for (const fs::path& path : files) {
    const Instance original = io::to_instance(io::instance_from_json(io::read_json(path)));
    const Instance instance = normalize(original);

    std::optional<OracleResult> oracle;
    double oracle_ms = 0.0;
    if (instance.size() <= args.max_n) {
      const auto start = Clock::now();
      oracle = solve_exact(instance, args.max_n);
      oracle_ms = ms_since(start);
    }

    for (double eps : args.eps_list) {
      const auto start = Clock::now();
      const SolveReport report = solve_fptas(instance, config_for(eps));
      const double fptas_ms = ms_since(start);

      rows << "| " << path.filename().string() << " | " << instance.size() << " | "
           << original.barrier_length() << " | " << eps << " | ";
      if (report.best.feasible) {
        rows << report.best.cost * original.radius();
      } else {
        rows << "infeasible";
      }
      rows << " | ";
      if (oracle && oracle->feasible) {
        rows << oracle->cost * original.radius();
      } else {
        rows << (oracle ? "infeasible" : "-");
      }
      rows << " | ";
      if (oracle && oracle->feasible && report.best.feasible) {
        const double r = ratio(report.best.cost, oracle->cost);
        rows << r;
        auto& [runs, max_ratio] = worst[eps];
        ++runs;
        max_ratio = std::max(max_ratio, r);
      } else {
        rows << "-";
      }
      rows << " | " << to_string(report.winner) << " | " << fptas_ms << " | "
           << (oracle ? std::to_string(oracle_ms) : std::string("-")) << " |\n";
    }
  }

  std::ostringstream summary;
  summary.precision(9);
  summary << "| eps | runs | max_ratio | bound |\n|---|---|---|---|\n";
  for (double eps : args.eps_list) {
    const auto it = worst.find(eps);
    const std::size_t runs = it == worst.end() ? 0 : it->second.first;
    const double max_ratio = it == worst.end() ? 0.0 : it->second.second;
    summary << "| " << eps << " | " << runs << " | " << max_ratio << " | " << 1.0 + eps << " |\n";
  }

  io::write_text(args.report, "# Benchmark\n\n## Runs\n\n" + rows.str() + "\n## Summary\n\n" + summary.str());
  out << summary.str();
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barrier coverage by touching unit circles: FPTAS solver and exact oracle"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the grid and DP arms and keep the cheaper cover");
  solve_cmd->add_option("--input", solve.input, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--eps", solve.eps, "Accuracy in (0, 1)")->required();
  solve_cmd->add_option("--endpoint-policy", solve.endpoint_policy)
      ->check(CLI::IsMember({"touching", "clamped"}));
  solve_cmd->add_option("--eligibility", solve.eligibility)->check(CLI::IsMember({"rectangle", "disk"}));
  solve_cmd->add_option("--y-window", solve.y_window)->check(CLI::IsMember({"symmetric", "paper"}));
  solve_cmd->add_flag("--parallel", solve.parallel, "Parallel grid arm (OpenMP)");
  solve_cmd->add_option("--out", solve.out, "Solution JSON (stdout when absent)");
  solve_cmd->add_option("--svg", solve.svg, "Write an SVG drawing of the cover");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact brute-force optimum for small instances");
  oracle_cmd->add_option("--input", oracle.input)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--max-n", oracle.max_n, "Refuse larger instances");
  oracle_cmd->add_option("--out", oracle.out);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a solution file against its instance");
  validate_cmd->add_option("--input", validate.input)->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--solution", validate.solution)->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--tol", validate.tol);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--L", gen.length)->required();
  gen_cmd->add_option("--height", gen.height)->required();
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--out", gen.out)->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a directory of instances and compare with the oracle");
  bench_cmd->add_option("--dir", bench.dir)->required()->check(CLI::ExistingDirectory);
  bench_cmd->add_option("--eps-list", bench.eps_list)->required()->delimiter(',');
  bench_cmd->add_option("--report", bench.report)->required();
  bench_cmd->add_option("--max-n", bench.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*validate_cmd) return cmd_validate(validate, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace barrier::cli
