#pragma once

#include <filesystem>
#include <string_view>

#include "mamab/sim_harness.hpp"

namespace mamab::cli {

/// Parses the experiment config JSON:
///   {"topology": {"kind", "n", "p"?, "rows"?, "cols"?},
///    "strategies": [{"name", "params": {...}}],
///    "bandit": {"arm_means", "sigma_g"}, "algo": {"gamma", "eta"},
///    "horizon", "n_trials", "seed"}
/// Random topologies are generated from the top-level seed. Throws
/// ArgumentError on any schema or value problem.
ExperimentConfig parse_config(std::string_view text);

/// Reads and parses a config file; missing or unreadable files are
/// reported as ArgumentError too (they are config errors, exit code 2).
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace mamab::cli
