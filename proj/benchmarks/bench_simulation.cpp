#include <benchmark/benchmark.h>

#include "mamab/sim_harness.hpp"

namespace {

void BM_RunTrial(benchmark::State& state) {
  mamab::ExperimentConfig cfg;
  cfg.topology = {mamab::TopologyKind::path, static_cast<std::size_t>(state.range(0))};
  cfg.bandit = mamab::BanditModel({0.0, 0.25, 0.5, 0.75, 1.0}, 1.0);
  cfg.horizon = 1000;
  const auto w = mamab::metropolis_hastings_weights(mamab::build_topology(cfg.topology));
  std::size_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mamab::run_trial(cfg, w, trial++));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.horizon));
}
BENCHMARK(BM_RunTrial)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace
