#include "mamab/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mamab/cli/config.hpp"
#include "mamab/cli/manifest.hpp"
#include "mamab/cli/svg_chart.hpp"
#include "mamab/errors.hpp"
#include "mamab/serialization.hpp"

namespace mamab::cli {

namespace fs = std::filesystem;

namespace {

std::string read_config_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedConfig {
  ExperimentConfig cfg;
  std::string text;
};

LoadedConfig load(const CommandOptions& opts) {
  auto text = read_config_text(opts.config);
  auto cfg = parse_config(text);
  if (opts.seed) {
    cfg.seed = *opts.seed;
    cfg.topology.seed = *opts.seed;
  }
  return {std::move(cfg), std::move(text)};
}

class OutputDir {
 public:
  explicit OutputDir(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec || !fs::is_directory(root_)) throw IoError("cannot create output directory '" + root_.string() + "'");
  }

  void write(const std::string& name, const std::string& content) {
    const auto path = root_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw IoError("failed to write '" + path.string() + "'");
    written_.push_back({name, content.size(), sha256_hex(content)});
  }

  const std::vector<ManifestEntry>& written() const { return written_; }

 private:
  fs::path root_;
  std::vector<ManifestEntry> written_;
};

// One file stem per strategy; repeated names get an index suffix.
std::vector<std::string> strategy_stems(const std::vector<StrategySpec>& strategies) {
  std::map<std::string, int> seen;
  for (const auto& s : strategies) ++seen[std::string(s.name())];
  std::vector<std::string> stems;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    std::string name(strategies[i].name());
    stems.push_back(seen[name] > 1 ? name + "_" + std::to_string(i) : name);
  }
  return stems;
}

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

template <typename Body>
int run_guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace

int cmd_graph(const CommandOptions& opts, std::ostream& err) {
  return run_guarded(err, [&] {
    const auto [cfg, text] = load(opts);
    const auto topology = build_topology(cfg.topology);
    std::vector<WeightMatrix> weights;
    for (const auto& s : cfg.strategies) weights.push_back(build_weights(topology, s));

    OutputDir out(opts.out_dir);
    out.write("topology.json", topology_to_json(topology) + "\n");
    const auto stems = strategy_stems(cfg.strategies);
    std::string csv = "strategy,slem\n";
    for (std::size_t i = 0; i < weights.size(); ++i) {
      out.write("weights_" + stems[i] + ".json", weights_to_json(weights[i]) + "\n");
      csv += std::string(cfg.strategies[i].name()) + "," + fixed4(slem(weights[i])) + "\n";
    }
    out.write("spectral.csv", csv);
  });
}

int cmd_optimize(const CommandOptions& opts, std::ostream& err) {
  return run_guarded(err, [&] {
    const auto [cfg, text] = load(opts);
    const StrategySpec* fdla = nullptr;
    for (const auto& s : cfg.strategies)
      if (s.kind == StrategyKind::fdla_optimized) {
        fdla = &s;
        break;
      }
    if (!fdla) throw ArgumentError("config lists no fdla_optimized strategy");

    const auto topology = build_topology(cfg.topology);
    const auto result = fdla_optimize(topology, FdlaParams::from(fdla->params));

    OutputDir out(opts.out_dir);
    out.write("optimized_weights.json", weights_to_json(result.weights) + "\n");
    std::string csv = "iter,best_slem\n";
    for (std::size_t k = 0; k < result.trace.best_slem.size(); ++k)
      csv += std::to_string(k + 1) + "," + format_double(result.trace.best_slem[k]) + "\n";
    out.write("optimize_trace.csv", csv);
  });
}

int cmd_compare(const CommandOptions& opts, std::ostream& err) {
  return run_guarded(err, [&] {
    RunManifest manifest;
    manifest.started_at = utc_timestamp();
    const auto [cfg, text] = load(opts);
    if (cfg.strategies.size() < 2) throw ArgumentError("compare needs at least two strategies");

    const auto sweep = run_sweep(cfg, opts.jobs);

    OutputDir out(opts.out_dir);
    const auto stems = strategy_stems(cfg.strategies);
    nlohmann::ordered_json summary = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < sweep.strategies.size(); ++i) {
      const auto& s = sweep.strategies[i];
      std::string csv = "t,mean_error,std_error,mean_regret\n";
      for (std::size_t t = 0; t < s.mean_error.size(); ++t)
        csv += std::to_string(t + 1) + "," + format_double(s.mean_error[t]) + "," + format_double(s.std_error[t]) +
               "," + format_double(s.mean_regret[t]) + "\n";
      out.write("curve_" + stems[i] + ".csv", csv);

      nlohmann::ordered_json entry;
      entry["strategy"] = std::string(s.strategy.name());
      entry["convergence_time"] = s.convergence_time ? nlohmann::ordered_json(*s.convergence_time) : nullptr;
      entry["final_error"] = s.final_error;
      summary.push_back(std::move(entry));
    }
    out.write("summary.json", summary.dump(2) + "\n");
    out.write("errors.svg", render_error_chart(sweep));

    manifest.config_hash = sha256_hex(text);
    manifest.tool_version = kToolVersion;
    manifest.seed = cfg.seed;
    manifest.files = out.written();
    manifest.finished_at = utc_timestamp();
    out.write("manifest.json", manifest.to_json());
  });
}

}  // namespace mamab::cli
