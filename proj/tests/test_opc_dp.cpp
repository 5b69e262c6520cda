#include <doctest.h>

#include <cmath>
#include <random>

#include "barrier/opc_dp.hpp"
#include "support/oracles.hpp"

using namespace barrier;

namespace {

double dist_to_center(Point p, double l) { return std::hypot(p.x - (l - 1.0), p.y); }

bool eligible_at(Point p, std::size_t k, double length, const OpcOptions& o, double l) {
  const auto w = eligibility_interval(p, k, length, o);
  return w && l >= w->lo && l <= w->hi;
}

}  // namespace

TEST_CASE("eligibility_interval examples") {
  const OpcOptions rect{0.5, YWindow::symmetric, Eligibility::rectangle};
  auto w = eligibility_interval({1.0, 0.3}, 1, 2.0, rect);
  REQUIRE(w);
  CHECK(w->lo == 1.5);
  CHECK(w->hi == 2.0);

  CHECK_FALSE(eligibility_interval({1.0, 0.6}, 1, 2.0, rect));
  CHECK_FALSE(eligibility_interval({5.0, 0.0}, 1, 2.0, rect));

  w = eligibility_interval({3.0, 0.1}, 2, 4.0, {0.25, YWindow::symmetric, Eligibility::rectangle});
  REQUIRE(w);
  CHECK(w->lo == 3.75);
  CHECK(w->hi == 4.0);

  w = eligibility_interval({1.0, 0.3}, 1, 2.0, {0.5, YWindow::symmetric, Eligibility::disk});
  REQUIRE(w);
  CHECK(w->lo == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(w->hi == 2.0);

  const OpcOptions literal{0.5, YWindow::paper_literal, Eligibility::rectangle};
  CHECK(eligibility_interval({1.0, 0.3}, 1, 2.0, literal));
  CHECK_FALSE(eligibility_interval({1.0, -0.3}, 1, 2.0, literal));
  CHECK(eligibility_interval({1.0, -0.3}, 1, 2.0, rect));
}

TEST_CASE("level domains tile (0, L + 2)") {
  CHECK(level_domain(1, 5.0).lo == 0.0);
  CHECK(level_domain(1, 5.0).hi == 2.0);
  CHECK(level_domain(3, 5.0).lo == 4.0);
  CHECK(level_domain(3, 5.0).hi == 6.0);
  CHECK(level_domain(4, 5.0).hi == 7.0);
}

TEST_CASE("crossing_point examples") {
  auto c = crossing_point({0.0, 0.0}, {2.0, 0.0});
  REQUIRE(c);
  CHECK(*c == 2.0);
  c = crossing_point({0.0, 1.0}, {2.0, 1.0});
  REQUIRE(c);
  CHECK(*c == 2.0);
  CHECK_FALSE(crossing_point({1.0, 0.0}, {1.0, 5.0}));
}

TEST_CASE("distances coincide at the crossing point") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ux(-5.0, 15.0), uy(-1.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const Point a{ux(rng), uy(rng)};
    const Point b{ux(rng), uy(rng)};
    if (std::abs(a.x - b.x) < 1e-3) continue;
    const auto c = crossing_point(a, b);
    REQUIRE(c);
    CHECK(std::abs(dist_to_center(a, *c) - dist_to_center(b, *c)) <= 1e-9);
  }
}

TEST_CASE("forward recursion on an aligned chain") {
  const Instance inst(4.0, 1.0, {{1.0, 0.0}, {3.0, 0.0}});
  const OpcOptions o{0.1, YWindow::symmetric, Eligibility::rectangle};
  const auto levels = forward_recursion(inst, o);
  REQUIRE(levels.size() == 2);
  REQUIRE(levels[0].pieces.size() == 1);
  CHECK(levels[0].pieces[0].circle == 0);
  CHECK(levels[0].pieces[0].lo == doctest::Approx(1.9));
  CHECK(levels[0].pieces[0].hi == 2.0);
  CHECK(levels[0].pieces[0].parent == kNoParent);
  REQUIRE(levels[1].pieces.size() == 1);
  CHECK(levels[1].pieces[0].circle == 1);
  CHECK(levels[1].pieces[0].lo == doctest::Approx(3.9));
  CHECK(levels[1].pieces[0].hi == 4.0);
  CHECK(levels[1].pieces[0].parent == 0);

  const auto best = extract_best(inst, levels);
  REQUIRE(best.feasible);
  CHECK(best.k == 2);
  CHECK(best.l == 4.0);
  CHECK(best.cost == 0.0);
}

TEST_CASE("extract_best examples") {
  const OpcOptions o{0.5, YWindow::symmetric, Eligibility::rectangle};
  const Instance lifted(2.0, 1.0, {{1.0, 0.3}});
  auto r = solve_opc(lifted, o);
  REQUIRE(r.feasible);
  CHECK(r.k_star == 1);
  CHECK(r.l_star == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.best_cost == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(r.solution.method == Method::dp);
  CHECK_FALSE(r.solution.delta);

  // Covering [0, 2] needs a center at 1, which is 0.1 away from the sensor.
  const Instance short_of(2.0, 1.0, {{0.9, 0.0}});
  r = solve_opc(short_of, {0.05, YWindow::symmetric, Eligibility::rectangle});
  CHECK_FALSE(r.feasible);
  CHECK(r.solution.placements.empty());
}

TEST_CASE("pieces carry the cheapest eligible circle") {
  std::mt19937_64 rng(23);
  const OpcOptions o{0.3, YWindow::symmetric, Eligibility::rectangle};
  int pieces = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 15, 8.0, 0.4);
    const auto levels = forward_recursion(inst, o);
    for (const auto& level : levels) {
      for (std::size_t p = 0; p < level.pieces.size(); ++p) {
        const Piece& piece = level.pieces[p];
        CHECK(piece.lo <= piece.hi);
        if (p > 0) CHECK(level.pieces[p - 1].hi <= piece.lo);
        if (piece.hi - piece.lo < 1e-9) continue;
        const double mid = 0.5 * (piece.lo + piece.hi);
        REQUIRE(eligible_at(inst.sensor(piece.circle), level.k, inst.barrier_length(), o, mid));
        const double chosen = dist_to_center(inst.sensor(piece.circle), mid);
        for (std::size_t i = 0; i < inst.size(); ++i) {
          if (!eligible_at(inst.sensor(i), level.k, inst.barrier_length(), o, mid)) continue;
          CHECK(chosen <= dist_to_center(inst.sensor(i), mid) + 1e-12);
        }
        ++pieces;
      }
    }
  }
  CHECK(pieces > 100);
}

TEST_CASE("extract_best agrees with dense sampling of S_K") {
  std::mt19937_64 rng(29);
  const OpcOptions o{0.4, YWindow::symmetric, Eligibility::rectangle};
  int feasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testing::perturbed_chain(rng, 1 + trial % 5, 0.4, trial % 3);
    const auto levels = forward_recursion(inst, o);
    const auto best = extract_best(inst, levels);
    const double length = inst.barrier_length();
    double dense = testing::kInf;
    for (const auto& level : levels) {
      for (std::size_t p = 0; p < level.pieces.size(); ++p) {
        const double lo = std::max(level.pieces[p].lo, length);
        const double hi = std::min(level.pieces[p].hi, length + 2.0);
        if (lo > hi) continue;
        dense = std::min(dense, testing::dense_min(
                                    [&](double l) { return chain_value(inst, levels, level.k, p, l); },
                                    lo, hi, 1e-4));
      }
    }
    if (!best.feasible) {
      CHECK(std::isinf(dense));
      continue;
    }
    ++feasible;
    CHECK(best.cost <= dense + 1e-9);
    CHECK(best.cost >= dense - 1e-3);
  }
  CHECK(feasible > 100);
}

TEST_CASE("S_K is convex on every piece") {
  std::mt19937_64 rng(31);
  const OpcOptions o{0.5, YWindow::symmetric, Eligibility::rectangle};
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 20, 10.0, 0.5);
    const auto levels = forward_recursion(inst, o);
    for (const auto& level : levels) {
      for (std::size_t p = 0; p < level.pieces.size(); ++p) {
        const double worst = testing::min_second_difference(
            [&](double l) { return chain_value(inst, levels, level.k, p, l); }, level.pieces[p].lo,
            level.pieces[p].hi);
        CHECK(worst >= -1e-8);
      }
    }
  }
}

TEST_CASE("reconstructed chains are valid order preserving covers with small moves") {
  std::mt19937_64 rng(37);
  for (Eligibility shape : {Eligibility::rectangle, Eligibility::disk}) {
    const double eps = 0.3;
    const OpcOptions o{eps, YWindow::symmetric, shape};
    const double bound = shape == Eligibility::disk ? eps : eps * std::sqrt(2.0);
    int feasible = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const Instance inst = testing::perturbed_chain(rng, 1 + trial % 7, eps, trial % 4);
      const auto r = solve_opc(inst, o);
      if (!r.feasible) continue;
      ++feasible;
      const auto report = validate_cover(inst, r.solution);
      CHECK(report.covers_barrier);
      CHECK(report.touching_ok);
      CHECK(report.order_preserving);
      CHECK(r.solution.placements.size() == r.k_star);
      CHECK(r.best_cost == doctest::Approx(cover_cost(inst, r.solution)).epsilon(1e-12));
      CHECK(r.l_star >= inst.barrier_length());
      CHECK(r.l_star < inst.barrier_length() + 2.0);
      CHECK(r.last_cell_overhang == doctest::Approx(r.l_star - inst.barrier_length()));
      for (const auto& pl : r.solution.placements) {
        CHECK(distance_to_line_point(inst.sensor(pl.sensor), pl.x) <= bound + 1e-9);
      }
    }
    CHECK(feasible > 100);
  }
}

TEST_CASE("DP matches the restricted enumeration oracle") {
  std::mt19937_64 rng(41);
  const double eps = 0.35;
  const OpcOptions o{eps, YWindow::symmetric, Eligibility::rectangle};
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = trial % 2 == 0 ? testing::perturbed_chain(rng, 1 + trial % 5, eps, trial % 3)
                                         : testing::random_instance(rng, 8, 5.0, 0.4);
    const auto r = solve_opc(inst, o);
    const auto expected = testing::restricted_opc_oracle(inst, eps);
    REQUIRE(r.feasible == expected.has_value());
    if (!r.feasible) continue;
    CHECK(std::abs(r.best_cost - *expected) <= 1e-6);
    ++agree;
  }
  CHECK(agree > 100);
}

TEST_CASE("upper half-window ignores sensors below the line") {
  const Instance inst(2.0, 1.0, {{1.0, -0.2}});
  CHECK(solve_opc(inst, {0.5, YWindow::symmetric, Eligibility::rectangle}).feasible);
  CHECK_FALSE(solve_opc(inst, {0.5, YWindow::paper_literal, Eligibility::rectangle}).feasible);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance chain = testing::perturbed_chain(rng, 1 + trial % 5, 0.3);
    const auto sym = solve_opc(chain, {0.3, YWindow::symmetric, Eligibility::rectangle});
    const auto lit = solve_opc(chain, {0.3, YWindow::paper_literal, Eligibility::rectangle});
    if (lit.feasible) {
      REQUIRE(sym.feasible);
      CHECK(sym.best_cost <= lit.best_cost + 1e-9);
      for (const auto& pl : lit.solution.placements) CHECK(chain.sensor(pl.sensor).y >= 0.0);
    }
  }
}

TEST_CASE("disk eligibility is a restriction of the rectangle") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance chain = testing::perturbed_chain(rng, 1 + trial % 5, 0.3, 2);
    const auto rect = solve_opc(chain, {0.3, YWindow::symmetric, Eligibility::rectangle});
    const auto disk = solve_opc(chain, {0.3, YWindow::symmetric, Eligibility::disk});
    if (disk.feasible) {
      REQUIRE(rect.feasible);
      CHECK(rect.best_cost <= disk.best_cost + 1e-9);
    }
  }
}

TEST_CASE("DP rejects unnormalized input and bad eps") {
  CHECK_THROWS_AS(solve_opc(Instance(4.0, 2.0, {{1.0, 0.0}}), {0.3}), InvalidInput);
  CHECK_THROWS_AS(solve_opc(Instance(4.0, 1.0, {{1.0, 0.0}}), {0.0}), InvalidInput);
  CHECK_THROWS_AS(solve_opc(Instance(4.0, 1.0, {{1.0, 0.0}}), {1.0}), InvalidInput);
}
