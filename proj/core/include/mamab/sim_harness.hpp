#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mamab/bandit_env.hpp"
#include "mamab/coop_ucb2.hpp"
#include "mamab/graph_core.hpp"
#include "mamab/weight_strategies.hpp"

namespace mamab {

struct ExperimentConfig {
  TopologySpec topology;
  std::vector<StrategySpec> strategies;
  BanditModel bandit{{0.0, 1.0}, 1.0};
  AlgoParams algo;
  std::size_t horizon = 1000;
  std::size_t n_trials = 1;
  std::uint64_t seed = 0;

  /// Throws ArgumentError for horizon == 0, n_trials == 0, or invalid algo
  /// parameters.
  void validate() const;
  /// algo with sigma_g taken from the bandit model.
  AlgoParams effective_algo() const;
};

struct TrialResult {
  std::vector<double> error_curve;   // team_error after round t (index t-1)
  std::vector<double> regret_curve;  // network-cumulative regret after round t
  std::size_t negative_count_events = 0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Called after every round with the post-consensus state and the round's
/// pulls and rewards.
using RoundObserver =
    std::function<void(const TeamState&, std::span<const std::size_t>, std::span<const double>)>;

/// Mean absolute deviation of the agents' best-arm estimates from the true
/// best-arm mean. Agents without a positive count contribute |mu*|.
double team_error(const TeamState& ts, const BanditModel& m);

/// Simulates one Monte-Carlo trial of the team using fixed weights. Rewards
/// are drawn from the stream addressed by (trial, agent, timestep) under
/// cfg.seed, so the result is a function of (cfg, weights, trial) alone.
TrialResult run_trial(const ExperimentConfig& cfg, const WeightMatrix& weights, std::size_t trial,
                      const RoundObserver& observer = {});
/// Builds the topology and the strategy's weights, then runs the trial.
TrialResult run_trial(const ExperimentConfig& cfg, const StrategySpec& strategy, std::size_t trial);

/// Threshold = 0.05 * (largest final value among the curves). Per curve,
/// the first 1-based timestep whose value is <= threshold, or nullopt.
/// Throws ArgumentError on empty input or unequal lengths.
std::vector<std::optional<std::size_t>> convergence_time(std::span<const std::vector<double>> mean_error_curves);

inline constexpr double kConvergenceFraction = 0.05;

struct StrategySweep {
  StrategySpec strategy;
  double slem = 0.0;
  std::vector<double> mean_error;
  std::vector<double> std_error;  // sample standard deviation across trials
  std::vector<double> mean_regret;
  std::optional<std::size_t> convergence_time;
  double final_error = 0.0;
  std::vector<TrialResult> trials;
};

struct SweepResult {
  Topology topology;
  std::vector<StrategySweep> strategies;
};

/// Runs every configured strategy for n_trials trials. Trials may execute
/// on up to `jobs` threads; aggregation is in trial order so the result does
/// not depend on the job count.
SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t jobs = 1);

}  // namespace mamab
