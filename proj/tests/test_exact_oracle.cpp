#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "barrier/exact_oracle.hpp"
#include "support/oracles.hpp"

using namespace barrier;

namespace {

// Every ordered tuple of every admissible length, golden-section over t.
double permutation_oracle(const Instance& inst) {
  const auto& s = inst.sensors();
  const double length = inst.barrier_length();
  double best = testing::kInf;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    const double kd = static_cast<double>(k);
    if (kd < length / 2.0 || kd >= length / 2.0 + 2.0) continue;
    const double lo = std::max(-1.0, length + 1.0 - 2.0 * kd);
    std::vector<std::size_t> slots;
    std::vector<char> used(s.size(), 0);
    std::function<void()> rec = [&] {
      if (slots.size() == k) {
        best = std::min(best, testing::golden_min(
                                  [&](double t) { return testing::chain_cost_ref(s, slots, t); }, lo, 1.0));
        return;
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        slots.push_back(i);
        rec();
        slots.pop_back();
        used[i] = 0;
      }
    };
    rec();
  }
  return best;
}

}  // namespace

TEST_CASE("admissible chain lengths and offsets") {
  CHECK(admissible_chain_lengths(2.0, 5) == std::vector<std::size_t>{1, 2});
  CHECK(admissible_chain_lengths(5.0, 5) == std::vector<std::size_t>{3, 4});
  CHECK(admissible_chain_lengths(5.0, 2).empty());
  CHECK(admissible_chain_lengths(0.5, 4) == std::vector<std::size_t>{1, 2});
  CHECK(offset_range(2.0, 1).lo == 1.0);
  CHECK(offset_range(2.0, 1).hi == 1.0);
  CHECK(offset_range(2.0, 2).lo == -1.0);
  CHECK(offset_range(5.0, 3).lo == 0.0);
}

TEST_CASE("oracle examples") {
  SUBCASE("single lifted sensor") {
    const auto r = solve_exact(Instance(2.0, 1.0, {{1.0, 0.5}}));
    REQUIRE(r.feasible);
    CHECK(r.cost == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.slots.size() == 1);
    CHECK(r.chain_offset == 1.0);
    CHECK(r.solution.method == Method::oracle);
  }
  SUBCASE("already a chain") {
    const auto r = solve_exact(Instance(4.0, 1.0, {{1.0, 0.0}, {3.0, 0.0}}));
    REQUIRE(r.feasible);
    CHECK(r.cost == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(r.slots.size() == 2);
    CHECK(r.chain_offset == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("two circles beat one") {
    const auto r = solve_exact(Instance(2.0, 1.0, {{-0.2, 0.4}, {2.3, -0.3}}));
    REQUIRE(r.feasible);
    CHECK(r.cost == doctest::Approx(std::sqrt(0.74)).epsilon(1e-9));
    CHECK(r.cost < std::sqrt(1.6));
    CHECK(r.slots == std::vector<std::size_t>{0, 1});
    CHECK(r.chain_offset == doctest::Approx(0.2 / 0.7 - 0.2).epsilon(1e-6));
    CHECK(r.circles() == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("not enough sensors") {
    const auto r = solve_exact(Instance(5.0, 1.0, {{1.0, 0.0}, {3.0, 0.0}}));
    CHECK_FALSE(r.feasible);
    CHECK(r.solution.placements.empty());
  }
}

TEST_CASE("oracle refuses large or unnormalized instances") {
  std::vector<Point> pts(11, Point{0.0, 0.0});
  CHECK_THROWS_AS(solve_exact(Instance(5.0, 1.0, pts)), InvalidInput);
  CHECK_THROWS_AS(solve_exact_parallel(Instance(5.0, 1.0, pts)), InvalidInput);
  CHECK_NOTHROW(solve_exact(Instance(5.0, 1.0, pts), 11));
  CHECK_THROWS_AS(solve_exact(Instance(4.0, 2.0, {{1.0, 0.0}})), InvalidInput);
}

TEST_CASE("oracle matches exhaustive permutations with golden-section search") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> un(1, 6);
  std::uniform_real_distribution<double> ul(0.5, 8.0), uh(0.0, 1.5);
  int feasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testing::random_instance(rng, un(rng), ul(rng), uh(rng));
    const auto r = solve_exact(inst);
    const double expected = permutation_oracle(inst);
    if (std::isinf(expected)) {
      CHECK_FALSE(r.feasible);
      continue;
    }
    REQUIRE(r.feasible);
    ++feasible;
    CHECK(std::abs(r.cost - expected) <= 1e-7);
    CHECK(r.cost == doctest::Approx(cover_cost(inst, r.solution)).epsilon(1e-12));
    const auto report = validate_cover(inst, r.solution);
    CHECK(report.covers_barrier);
    CHECK(report.touching_ok);
  }
  CHECK(feasible > 80);
}

TEST_CASE("chain cost agrees with a dense scan") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng, 4, 3.0, 1.0);
    const auto r = solve_exact(inst);
    REQUIRE(r.feasible);
    const auto range = offset_range(inst.barrier_length(), r.slots.size());
    const double dense = testing::dense_min(
        [&](double t) { return testing::chain_cost_ref(inst.sensors(), r.slots, t); }, range.lo, range.hi,
        1e-5);
    CHECK(r.cost <= dense + 1e-12);
    CHECK(r.cost >= dense - 1e-5);
  }
}

TEST_CASE("OpenMP oracle returns the serial optimum") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::size_t> un(1, 8);
  std::uniform_real_distribution<double> ul(0.5, 10.0), uh(0.0, 1.5);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng, un(rng), ul(rng), uh(rng));
    const auto serial = solve_exact(inst);
    const auto parallel = solve_exact_parallel(inst);
    REQUIRE(serial.feasible == parallel.feasible);
    if (!serial.feasible) continue;
    CHECK(std::abs(serial.cost - parallel.cost) <= 1e-12);
    CHECK(parallel.cost == doctest::Approx(cover_cost(inst, parallel.solution)).epsilon(1e-12));
  }
}

TEST_CASE("chain cost is convex in the offset") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> ux(-1.0, 9.0), uy(-1.5, 1.5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({ux(rng), uy(rng)});
    const Instance inst(8.0, 1.0, pts);
    std::vector<std::size_t> slots(5);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    const double worst = testing::min_second_difference(
        [&](double t) { return chain_cost(inst, slots, t); }, -1.0, 1.0, 200);
    CHECK(worst >= -1e-8);
  }
}
