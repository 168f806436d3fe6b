#include <benchmark/benchmark.h>

#include "mamab/graph_core.hpp"
#include "mamab/symmetric_eigen.hpp"
#include "mamab/weight_strategies.hpp"

namespace {

mamab::Topology grid_of(std::size_t side) {
  return mamab::build_topology({mamab::TopologyKind::grid, side * side, side, side});
}

void BM_SymmetricEigen(benchmark::State& state) {
  const auto t = grid_of(static_cast<std::size_t>(state.range(0)));
  const auto w = mamab::metropolis_hastings_weights(t);
  for (auto _ : state) benchmark::DoNotOptimize(mamab::symmetric_eigen(w.entries()));
  state.SetLabel(std::to_string(t.size()) + " nodes");
}
BENCHMARK(BM_SymmetricEigen)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_FdlaOptimize(benchmark::State& state) {
  const auto t = grid_of(static_cast<std::size_t>(state.range(0)));
  mamab::FdlaParams params;
  params.max_iters = 200;
  params.tol = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(mamab::fdla_optimize(t, params));
}
BENCHMARK(BM_FdlaOptimize)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
