#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>

namespace mamab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

inline constexpr const char* kToolVersion = "0.1.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;  // overrides the config seed
};

/// topology.json, weights_<strategy>.json per strategy, spectral.csv.
int cmd_graph(const CommandOptions& opts, std::ostream& err);
/// optimized_weights.json and optimize_trace.csv for the config's
/// fdla_optimized strategy.
int cmd_optimize(const CommandOptions& opts, std::ostream& err);
/// curve_<strategy>.csv per strategy, summary.json, errors.svg,
/// manifest.json.
int cmd_compare(const CommandOptions& opts, std::ostream& err);

}  // namespace mamab::cli
