#include <doctest.h>

#include <cmath>

#include "mamab/errors.hpp"
#include "mamab/weight_strategies.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mamab;

namespace {

const Topology& path3() {
  static const auto t = build_topology({TopologyKind::path, 3});
  return t;
}
const Topology& star4() {
  static const auto t = build_topology({TopologyKind::star, 4});
  return t;
}

void check_matrix(const WeightMatrix& w, const std::vector<std::vector<double>>& expected, double tol = 1e-15) {
  REQUIRE(w.size() == expected.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(std::abs(w(i, j) - expected[i][j]) <= tol);
    }
}

FdlaParams unconstrained() {
  FdlaParams p;
  p.nonnegative = false;
  return p;
}

std::vector<WeightMatrix> all_strategies(const Topology& t) {
  const double alpha = 0.5 / static_cast<double>(t.max_degree());
  return {manual_constant_weights(t, alpha),  max_degree_weights(t),    local_degree_weights(t),
          metropolis_hastings_weights(t),     best_constant_weights(t), fdla_optimize(t).weights,
          fdla_optimize(t, unconstrained()).weights};
}

}  // namespace

TEST_CASE("manual_constant") {
  check_matrix(manual_constant_weights(path3(), 0.5), {{0.5, 0.5, 0}, {0.5, 0, 0.5}, {0, 0.5, 0.5}});
  CHECK(slem(manual_constant_weights(path3(), 1e-6)) > 0.99);

  const auto c3 = build_topology({TopologyKind::complete, 3});
  const auto w = manual_constant_weights(c3, 1.0 / 3.0);
  check_matrix(w, {{1.0 / 3, 1.0 / 3, 1.0 / 3}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {1.0 / 3, 1.0 / 3, 1.0 / 3}}, 1e-15);
  CHECK(slem(w) <= 1e-12);

  CHECK_THROWS_AS(manual_constant_weights(path3(), 0.0), ArgumentError);
  CHECK_THROWS_AS(manual_constant_weights(path3(), -0.1), ArgumentError);
  CHECK_THROWS_AS(manual_constant_weights(path3(), 0.51), ArgumentError);
  CHECK_THROWS_AS(manual_constant_weights(path3(), NAN), ArgumentError);
}

TEST_CASE("max_degree") {
  check_matrix(max_degree_weights(path3()), {{2.0 / 3, 1.0 / 3, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0, 1.0 / 3, 2.0 / 3}},
               1e-15);
  const auto k2 = max_degree_weights(build_topology({TopologyKind::complete, 2}));
  check_matrix(k2, {{0.5, 0.5}, {0.5, 0.5}});
  CHECK(slem(k2) <= 1e-12);

  // Cycle-4: L spectrum (0, 2, 2, 4) so W = I - L/3 has (1, 1/3, 1/3, -1/3).
  const auto c4 = max_degree_weights(build_topology({TopologyKind::cycle, 4}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(c4(i, i) == doctest::Approx(1.0 / 3.0));
  CHECK(slem(c4) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("local_degree") {
  check_matrix(local_degree_weights(path3()), {{0.5, 0.5, 0}, {0.5, 0, 0.5}, {0, 0.5, 0.5}});
  const auto s = local_degree_weights(star4());
  CHECK(s(0, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(std::abs(s(0, 0)) <= 1e-15);
  CHECK(s(1, 1) == doctest::Approx(2.0 / 3.0));
  // Complete-3: zero diagonal, spectrum (1, -1/2, -1/2).
  const auto c3 = local_degree_weights(build_topology({TopologyKind::complete, 3}));
  CHECK(c3(0, 0) == 0.0);
  CHECK(slem(c3) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("metropolis_hastings") {
  const auto w = metropolis_hastings_weights(path3());
  check_matrix(w, {{2.0 / 3, 1.0 / 3, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0, 1.0 / 3, 2.0 / 3}}, 1e-15);
  CHECK(slem(w) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(slem(metropolis_hastings_weights(build_topology({TopologyKind::complete, 2}))) <= 1e-12);
  const auto s = metropolis_hastings_weights(star4());
  CHECK(s(0, 2) == doctest::Approx(0.25));
  CHECK(s(0, 0) == doctest::Approx(0.25));
  CHECK(s(3, 3) == doctest::Approx(0.75));
}

TEST_CASE("best_constant") {
  CHECK(best_constant_alpha(path3()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(slem(best_constant_weights(path3())) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(best_constant_alpha(star4()) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(slem(best_constant_weights(star4())) == doctest::Approx(0.6).epsilon(1e-12));
  for (std::size_t n : {3u, 5u, 8u, 13u}) {
    const auto t = build_topology({TopologyKind::complete, n});
    CHECK(best_constant_alpha(t) == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
    CHECK(slem(best_constant_weights(t)) <= 1e-12);
  }
}

TEST_CASE("fdla analytic optima") {
  for (bool nonneg : {false, true}) {
    FdlaParams p;
    p.nonnegative = nonneg;
    const auto r = fdla_optimize(path3(), p);
    CHECK(std::abs(slem(r.weights) - 0.5) <= 1e-3);
    for (double w : r.weights.edge_weights()) CHECK(std::abs(w - 0.5) <= 1e-3);
  }

  const auto s = fdla_optimize(star4(), unconstrained());
  CHECK(std::abs(slem(s.weights) - 0.6) <= 1e-3);
  for (double w : s.weights.edge_weights()) CHECK(std::abs(w - 0.4) <= 1e-3);

  // With nonnegative entries the hub caps each edge at 1/3:
  // slem = max(1 - w, |1 - 4w|) at w = 1/3 is 2/3.
  const auto s_nn = fdla_optimize(star4());
  CHECK(std::abs(slem(s_nn.weights) - 2.0 / 3.0) <= 1e-3);
}

TEST_CASE("fdla on path-4 matches a grid search over edge weights") {
  const auto t = build_topology({TopologyKind::path, 4});
  const double bc = slem(best_constant_weights(t));
  CHECK(bc == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));

  // Independent oracle: end weights equal by reflection symmetry, grid step
  // 5e-3 on the remaining two, SLEM evaluated with Eigen.
  double grid_best = 1e9;
  for (int a = 0; a <= 200; ++a)
    for (int b = 0; b <= 200; ++b) {
      const double wa = a * 5e-3, wb = b * 5e-3;
      Eigen::MatrixXd w = Eigen::MatrixXd::Identity(4, 4);
      const double ws[3] = {wa, wb, wa};
      for (int l = 0; l < 3; ++l) {
        w(l, l) -= ws[l];
        w(l + 1, l + 1) -= ws[l];
        w(l, l + 1) += ws[l];
        w(l + 1, l) += ws[l];
      }
      grid_best = std::min(grid_best, testing::reference_slem(w));
    }
  // The same search at 1e-3 resolution gives sqrt(2)/2 at (0.5, 0.5, 0.5).
  CHECK(grid_best == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-9));

  const double opt = slem(fdla_optimize(t, unconstrained()).weights);
  CHECK(opt <= bc + 1e-15);
  CHECK(std::abs(opt - grid_best) <= 1e-3);
}

TEST_CASE("fdla approaches the SDP optimum on a grid") {
  // Reference optimum 0.86303661 from an interior-point SDP solve of the same
  // problem (unconstrained weights, 4x5 grid).
  const auto t = build_topology({TopologyKind::grid, 20, 4, 5});
  const double opt = slem(fdla_optimize(t, unconstrained()).weights);
  CHECK(opt >= 0.86303661 - 1e-6);
  CHECK(opt <= 0.86303661 + 5e-4);
  CHECK(opt < slem(best_constant_weights(t)) - 0.03);
}

TEST_CASE("fdla trace and parameters") {
  const auto t = build_topology({TopologyKind::grid, 12, 3, 4});
  FdlaParams one;
  one.max_iters = 1;
  const auto r1 = fdla_optimize(t, one);
  REQUIRE(r1.trace.best_slem.size() == 1);

  const auto r = fdla_optimize(t, unconstrained());
  CHECK(r.trace.best_slem.size() <= 500);
  for (std::size_t k = 1; k < r.trace.best_slem.size(); ++k)
    CHECK(r.trace.best_slem[k] <= r.trace.best_slem[k - 1]);
  CHECK(r.trace.best_slem.front() == doctest::Approx(slem(best_constant_weights(t))));
  CHECK(r.trace.best_slem.back() == doctest::Approx(slem(r.weights)).epsilon(1e-12));

  CHECK_THROWS_AS(FdlaParams::from({{"max_iters", 0}}), ArgumentError);
  CHECK_THROWS_AS(FdlaParams::from({{"max_iters", 2.5}}), ArgumentError);
  CHECK_THROWS_AS(FdlaParams::from({{"step_scale", -1}}), ArgumentError);
  CHECK_THROWS_AS(FdlaParams::from({{"tol", -1}}), ArgumentError);
  CHECK_THROWS_AS(FdlaParams::from({{"nonnegative", 0.5}}), ArgumentError);
  const auto p = FdlaParams::from({{"max_iters", 10}, {"nonnegative", 0}});
  CHECK(p.max_iters == 10);
  CHECK_FALSE(p.nonnegative);
  CHECK(p.step_scale == 1.0);

  FdlaParams bad;
  bad.max_iters = 0;
  CHECK_THROWS_AS(fdla_optimize(t, bad), ArgumentError);
}

TEST_CASE("build_weights dispatch") {
  const auto mh = build_weights(path3(), StrategySpec::parse("metropolis_hastings"));
  CHECK(mh.entries() == metropolis_hastings_weights(path3()).entries());
  const auto manual = build_weights(path3(), StrategySpec::parse("manual_constant", {{"alpha", 0.5}}));
  CHECK(max_abs_diff(manual.entries(), best_constant_weights(path3()).entries()) <= 1e-15);
  CHECK_THROWS_AS(StrategySpec::parse("bogus"), ArgumentError);
  CHECK_THROWS_AS(StrategySpec::parse("manual_constant"), ArgumentError);
  CHECK_THROWS_AS(StrategySpec::parse("fdla_optimized", {{"max_iters", -3}}), ArgumentError);
  for (auto name : {"manual_constant", "max_degree", "local_degree", "metropolis_hastings", "best_constant",
                    "fdla_optimized"})
    CHECK(to_string(parse_strategy_kind(name)) == name);
}

TEST_CASE("property: every strategy yields a valid weight matrix on every generator topology") {
  for (const auto& [name, t] : testing::topology_zoo()) {
    CAPTURE(name);
    for (const auto& w : all_strategies(t)) CHECK(check_weight_invariants(t, w.entries()).empty());
  }
}

TEST_CASE("property: spectral orderings") {
  for (const auto& [name, t] : testing::topology_zoo()) {
    CAPTURE(name);
    const double bc = slem(best_constant_weights(t));
    const double d_max = static_cast<double>(t.max_degree());
    for (int k = 1; k <= 20; ++k) {
      const double alpha = static_cast<double>(k) / (20.0 * d_max);
      CHECK(bc <= slem(manual_constant_weights(t, alpha)) + 1e-12);
    }
    const auto fdla = fdla_optimize(t, unconstrained());
    CHECK(slem(fdla.weights) <= bc + 1e-12);
    for (std::size_t k = 1; k < fdla.trace.best_slem.size(); ++k)
      CHECK(fdla.trace.best_slem[k] <= fdla.trace.best_slem[k - 1]);

    CHECK(slem(metropolis_hastings_weights(t)) < 1.0);
    CHECK(slem(max_degree_weights(t)) < 1.0);

    const auto nn = fdla_optimize(t);
    for (double x : nn.weights.entries().data()) CHECK(x >= -1e-12);
  }
}
