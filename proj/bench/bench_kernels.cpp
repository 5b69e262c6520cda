// Serial reference kernels against their OpenMP versions, plus DP scaling.

#include <benchmark/benchmark.h>

#include <random>

#include "barrier/exact_oracle.hpp"
#include "barrier/grid_scheme.hpp"
#include "barrier/opc_dp.hpp"
#include "support/oracles.hpp"

using namespace barrier;

namespace {

Instance grid_instance(std::size_t n) {
  std::mt19937_64 rng(n);
  return testing::random_instance(rng, n, static_cast<double>(n) / 2.0, 1.0);
}

void BM_GridSerial(benchmark::State& state) {
  const Instance inst = grid_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_grid(inst, {0.1, EndpointPolicy::touching, false, false}));
  }
}

void BM_GridParallel(benchmark::State& state) {
  const Instance inst = grid_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_grid(inst, {0.1, EndpointPolicy::touching, true, false}));
  }
}

Instance oracle_instance() {
  std::mt19937_64 rng(17);
  return testing::random_instance(rng, 9, 9.0, 1.0);
}

void BM_OracleSerial(benchmark::State& state) {
  const Instance inst = oracle_instance();
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst));
}

void BM_OracleParallel(benchmark::State& state) {
  const Instance inst = oracle_instance();
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact_parallel(inst));
}

void BM_OpcDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t slots = n / 2 + 1;
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  std::uniform_int_distribution<std::size_t> slot(0, slots - 1);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i < slots ? i : slot(rng);
    pts.push_back({-0.5 + 2.0 * static_cast<double>(j) + jitter(rng), jitter(rng)});
  }
  const Instance inst(2.0 * static_cast<double>(slots) - 2.0, 1.0, std::move(pts));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_opc(inst, {0.3, YWindow::symmetric, Eligibility::rectangle}));
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpcDense)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
