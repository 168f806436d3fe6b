#include "mamab/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mamab/errors.hpp"

namespace mamab::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ArgumentError(std::string("config is missing '") + key + "'");
  return obj.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ArgumentError(std::string("'") + what + "' must be a number");
  return j.get<double>();
}

// Non-negative integer; rejects fractional and negative values.
std::uint64_t count(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ArgumentError(std::string("'") + what + "' must be a non-negative integer");
}

TopologySpec parse_topology(const json& j, std::uint64_t seed) {
  if (!j.is_object()) throw ArgumentError("'topology' must be an object");
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) throw ArgumentError("'topology.kind' must be a string");
  TopologySpec spec;
  spec.kind = parse_topology_kind(kind.get<std::string>());
  spec.n = count(require(j, "n"), "topology.n");
  if (j.contains("p")) spec.p = number(j.at("p"), "topology.p");
  if (j.contains("rows")) spec.rows = count(j.at("rows"), "topology.rows");
  if (j.contains("cols")) spec.cols = count(j.at("cols"), "topology.cols");
  spec.seed = seed;
  return spec;
}

StrategySpec parse_strategy(const json& j) {
  if (!j.is_object()) throw ArgumentError("each strategy must be an object");
  const auto& name = require(j, "name");
  if (!name.is_string()) throw ArgumentError("strategy 'name' must be a string");
  StrategyParams params;
  if (j.contains("params")) {
    const auto& p = j.at("params");
    if (!p.is_object()) throw ArgumentError("strategy 'params' must be an object");
    for (const auto& [key, value] : p.items()) {
      if (value.is_boolean())
        params[key] = value.get<bool>() ? 1.0 : 0.0;
      else
        params[key] = number(value, key.c_str());
    }
  }
  return StrategySpec::parse(name.get<std::string>(), std::move(params));
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  json root = json::parse(text.begin(), text.end(), nullptr, false);
  if (root.is_discarded()) throw ArgumentError("config is not valid JSON");
  if (!root.is_object()) throw ArgumentError("config must be a JSON object");

  ExperimentConfig cfg;
  cfg.seed = count(require(root, "seed"), "seed");
  cfg.topology = parse_topology(require(root, "topology"), cfg.seed);

  const auto& strategies = require(root, "strategies");
  if (!strategies.is_array() || strategies.empty()) throw ArgumentError("'strategies' must be a non-empty array");
  for (const auto& s : strategies) cfg.strategies.push_back(parse_strategy(s));

  const auto& bandit = require(root, "bandit");
  const auto& means = require(bandit, "arm_means");
  if (!means.is_array()) throw ArgumentError("'bandit.arm_means' must be an array");
  std::vector<double> arm_means;
  for (const auto& m : means) arm_means.push_back(number(m, "bandit.arm_means[]"));
  cfg.bandit = BanditModel(std::move(arm_means), number(require(bandit, "sigma_g"), "bandit.sigma_g"));

  const auto& algo = require(root, "algo");
  cfg.algo.gamma = number(require(algo, "gamma"), "algo.gamma");
  cfg.algo.eta = number(require(algo, "eta"), "algo.eta");

  cfg.horizon = count(require(root, "horizon"), "horizon");
  cfg.n_trials = count(require(root, "n_trials"), "n_trials");
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace mamab::cli
