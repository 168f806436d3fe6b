#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mamab/graph_core.hpp"

namespace mamab {

struct AlgoParams {
  double gamma = 1.01;
  double eta = 1.0;
  double sigma_g = 0.0;

  /// Throws ArgumentError unless gamma > 1, 0 < eta <= 1, sigma_g >= 0.
  void validate() const;
  /// G(eta) = 1 - eta^2 / 16
  double g_eta() const noexcept { return 1.0 - eta * eta / 16.0; }
};

/// f(t) = sqrt(ln t) for t >= 1, 0 below.
double exploration_growth(double t) noexcept;

/// Per-agent running-consensus statistics.
struct AgentState {
  std::vector<double> n_hat;  // estimated pull counts per arm
  std::vector<double> s_hat;  // estimated cumulative reward per arm
};

struct TeamState {
  std::vector<AgentState> agents;
  std::uint64_t t = 0;  // completed rounds

  static TeamState zeros(std::size_t team_size, std::size_t arm_count);
  std::size_t team_size() const noexcept { return agents.size(); }
};

/// Index returned for arms an agent has no (positive) count for.
inline constexpr double kUnexploredIndex = std::numeric_limits<double>::infinity();

/// Coop-UCB2 upper confidence index of one arm for one agent at timestep t:
///   s/n + sigma_g * sqrt((2 gamma / G(eta)) * ((n + f(t)) / (M n)) * (ln t / n))
/// with n = n_hat[arm], s = s_hat[arm], M the team size. Requires t >= 1.
double ucb_index(const AgentState& a, std::size_t arm, double t, const AlgoParams& p, std::size_t team_size);

/// argmax, lowest index on ties. Throws ArgumentError on empty input.
std::size_t select_arm(std::span<const double> indices);

/// One synchronous running-consensus round: every agent k sets
///   n_hat_i^k <- sum_j W[k][j] (n_hat_i^j + [pull_j == i])
///   s_hat_i^k <- sum_j W[k][j] (s_hat_i^j + r_j [pull_j == i])
/// from the pre-step state, and t advances by one.
TeamState consensus_step(const TeamState& ts, const WeightMatrix& w, std::span<const std::size_t> pulls,
                         std::span<const double> rewards);

/// s_hat / n_hat; throws NotEstimableError when n_hat[arm] <= 0.
double estimated_mean(const AgentState& a, std::size_t arm);

}  // namespace mamab
