#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "mamab/errors.hpp"
#include "mamab/graph_core.hpp"
#include "mamab/weight_strategies.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mamab;

namespace {

std::vector<Edge> edges_of(const Topology& t) { return {t.edges().begin(), t.edges().end()}; }

}  // namespace

TEST_CASE("build_topology generators") {
  CHECK(edges_of(build_topology({TopologyKind::path, 3})) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(edges_of(build_topology({TopologyKind::complete, 3})) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(edges_of(build_topology({TopologyKind::star, 4})) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  CHECK(edges_of(build_topology({TopologyKind::cycle, 4})) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  const auto grid = build_topology({TopologyKind::grid, 6, 2, 3});
  CHECK(grid.edges().size() == 7);  // 2*(3-1) horizontal + 3*(2-1) vertical
  CHECK(grid.has_edge(0, 3));
  CHECK(grid.has_edge(4, 5));
  CHECK_FALSE(grid.has_edge(2, 3));
}

TEST_CASE("build_topology argument errors") {
  CHECK_THROWS_AS(build_topology({TopologyKind::path, 1}), ArgumentError);
  CHECK_THROWS_AS(build_topology({TopologyKind::cycle, 2}), ArgumentError);
  CHECK_THROWS_AS(build_topology({TopologyKind::grid, 6, 2, 2}), ArgumentError);
  CHECK_THROWS_AS(build_topology({TopologyKind::random, 10, 0, 0, 0.0, 1}), ArgumentError);
  CHECK_THROWS_AS(build_topology({TopologyKind::random, 10, 0, 0, 1.5, 1}), ArgumentError);
  CHECK_THROWS_AS(parse_topology_kind("hypercube"), ArgumentError);
}

TEST_CASE("random topologies are connected and seed-deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TopologySpec spec{TopologyKind::random, 20, 0, 0, 0.2, seed};
    const auto a = build_topology(spec);
    CHECK(is_connected(a));
    CHECK(a == build_topology(spec));
  }
  // p = 1 is the complete graph.
  CHECK(build_topology({TopologyKind::random, 6, 0, 0, 1.0, 9}) == build_topology({TopologyKind::complete, 6}));
}

TEST_CASE("random topology gives up after the retry budget") {
  // Expected edge count 1e-9 * 4950: never connected.
  CHECK_THROWS_AS(build_topology({TopologyKind::random, 100, 0, 0, 1e-9, 0}), ConstructionError);
}

TEST_CASE("Topology validates its edge set") {
  CHECK_THROWS_AS(Topology(3, {{0, 0}, {1, 2}}), ArgumentError);
  CHECK_THROWS_AS(Topology(3, {{0, 1}, {1, 0}, {1, 2}}), ArgumentError);
  CHECK_THROWS_AS(Topology(3, {{0, 1}, {1, 3}}), ArgumentError);
  CHECK_THROWS_AS(Topology(3, {{0, 1}}), ConstructionError);
  const Topology t(3, {{2, 1}, {1, 0}});
  CHECK(edges_of(t) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(t.degree(1) == 2);
  CHECK(t.max_degree() == 2);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(build_topology({TopologyKind::path, 3})));
  CHECK_FALSE(is_connected(2, {}));
  CHECK(is_connected(build_topology({TopologyKind::star, 4})));
  const std::vector<Edge> two_components{{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(4, two_components));
}

TEST_CASE("laplacian") {
  const auto l3 = laplacian(build_topology({TopologyKind::path, 3}));
  CHECK(l3 == Matrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
  CHECK(laplacian(build_topology({TopologyKind::complete, 2})) == Matrix::from_rows({{1, -1}, {-1, 1}}));

  const auto star = laplacian(build_topology({TopologyKind::star, 4}));
  CHECK(star == Matrix::from_rows({{3, -1, -1, -1}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}}));

  for (const auto& [name, t] : testing::topology_zoo()) {
    const auto l = laplacian(t);
    CAPTURE(name);
    CHECK(l.asymmetry() == 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto row = l.row(i);
      CHECK(std::accumulate(row.begin(), row.end(), 0.0) == 0.0);
      CHECK(l(i, i) == static_cast<double>(t.degree(i)));
    }
  }
}

TEST_CASE("WeightMatrix rejects invariant violations") {
  const auto t = build_topology({TopologyKind::path, 3});
  // Off-pattern entry (0,2).
  CHECK_THROWS_AS(WeightMatrix(t, Matrix::from_rows({{0.5, 0.25, 0.25}, {0.25, 0.5, 0.25}, {0.25, 0.25, 0.5}})),
                  ArgumentError);
  // Row sums.
  CHECK_THROWS_AS(WeightMatrix(t, Matrix::from_rows({{0.5, 0.5, 0}, {0.5, 0.5, 0.5}, {0, 0.5, 0.5}})), ArgumentError);
  // Asymmetric.
  CHECK_THROWS_AS(WeightMatrix(t, Matrix::from_rows({{0.6, 0.4, 0}, {0.5, 0, 0.5}, {0, 0.5, 0.5}})), ArgumentError);
  // Dimension.
  CHECK_THROWS_AS(WeightMatrix(t, Matrix::identity(2)), ArgumentError);
  CHECK_NOTHROW(WeightMatrix(t, Matrix::identity(3)));
}

TEST_CASE("slem analytic values") {
  const auto p3 = build_topology({TopologyKind::path, 3});
  const auto c3 = build_topology({TopologyKind::complete, 3});
  CHECK(slem(WeightMatrix(c3, Matrix(3, 1.0 / 3.0))) <= 1e-12);
  CHECK(slem(metropolis_hastings_weights(p3)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(slem(best_constant_weights(p3)) == doctest::Approx(0.5).epsilon(1e-12));

  const auto report = spectral_report(metropolis_hastings_weights(p3));
  REQUIRE(report.eigenvalues.size() == 3);
  CHECK(report.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(report.eigenvalues[1] == doctest::Approx(2.0 / 3.0));
  CHECK(report.eigenvalues[2] == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("spectral report: top eigenvalue 1 and slem matches the reference solver") {
  for (const auto& [name, t] : testing::topology_zoo()) {
    CAPTURE(name);
    const auto w = metropolis_hastings_weights(t);
    const auto report = spectral_report(w);
    CHECK(std::abs(report.eigenvalues.front() - 1.0) <= 1e-8);
    CHECK(std::abs(report.slem - std::max(std::abs(report.eigenvalues[1]), std::abs(report.eigenvalues.back()))) <=
          1e-10);
    CHECK(std::abs(report.slem - testing::reference_slem(w.entries())) <= 1e-10);
  }
}

TEST_CASE("consensus contraction and average preservation") {
  std::mt19937_64 gen(77);
  for (const auto& [name, t] : testing::topology_zoo()) {
    for (auto* build : {&max_degree_weights, &local_degree_weights, &metropolis_hastings_weights,
                        &best_constant_weights}) {
      const auto w = build(t);
      const double rho = slem(w);
      if (!(rho < 1.0)) continue;
      CAPTURE(name);
      for (int trial = 0; trial < 100; ++trial) {
        const auto x = testing::random_vector(gen, t.size());
        const auto wx = w.entries() * x;
        const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
        const double mean_wx = std::accumulate(wx.begin(), wx.end(), 0.0) / static_cast<double>(x.size());
        CHECK(std::abs(mean_wx - mean_x) <= 1e-9);
        double before = 0.0, after = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          before += (x[i] - mean_x) * (x[i] - mean_x);
          after += (wx[i] - mean_x) * (wx[i] - mean_x);
        }
        CHECK(std::sqrt(after) <= rho * std::sqrt(before) + 1e-9);
      }
    }
  }
}
