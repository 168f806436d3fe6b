#include <iostream>

#include <CLI11.hpp>

#include "mamab/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace mamab::cli;

  CLI::App app{"Multi-agent bandit consensus-weight experiments"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CommandOptions opts;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config, "Experiment config JSON")->required();
    sub->add_option("--out", opts.out_dir, "Output directory")->required();
    sub->add_option("--jobs", opts.jobs, "Worker threads for trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Override the config seed");
  };

  auto* graph = app.add_subcommand("graph", "Write topology, per-strategy weights and their SLEM");
  auto* optimize = app.add_subcommand("optimize", "Run the spectral weight optimizer and write its trace");
  auto* compare = app.add_subcommand("compare", "Run the Monte-Carlo comparison of all configured strategies");
  for (auto* sub : {graph, optimize, compare}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  for (auto* sub : {graph, optimize, compare})
    if (sub->count("--seed")) opts.seed = seed;

  if (graph->parsed()) return cmd_graph(opts, std::cerr);
  if (optimize->parsed()) return cmd_optimize(opts, std::cerr);
  return cmd_compare(opts, std::cerr);
}
