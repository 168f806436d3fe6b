#include "mamab/coop_ucb2.hpp"

#include <cmath>

#include "mamab/errors.hpp"

namespace mamab {

void AlgoParams::validate() const {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw ArgumentError("gamma must be > 1");
  if (!(eta > 0.0 && eta <= 1.0)) throw ArgumentError("eta must lie in (0, 1]");
  if (!(sigma_g >= 0.0) || !std::isfinite(sigma_g)) throw ArgumentError("sigma_g must be finite and >= 0");
}

double exploration_growth(double t) noexcept { return t >= 1.0 ? std::sqrt(std::log(t)) : 0.0; }

TeamState TeamState::zeros(std::size_t team_size, std::size_t arm_count) {
  TeamState ts;
  ts.agents.assign(team_size, AgentState{std::vector<double>(arm_count, 0.0), std::vector<double>(arm_count, 0.0)});
  return ts;
}

double ucb_index(const AgentState& a, std::size_t arm, double t, const AlgoParams& p, std::size_t team_size) {
  if (arm >= a.n_hat.size() || arm >= a.s_hat.size()) throw ArgumentError("arm index out of range");
  if (!(t >= 1.0)) throw ArgumentError("ucb_index needs t >= 1");
  const double n = a.n_hat[arm];
  if (n <= 0.0) return kUnexploredIndex;
  const double mean = a.s_hat[arm] / n;
  const double m = static_cast<double>(team_size);
  const double bonus_sq =
      (2.0 * p.gamma / p.g_eta()) * ((n + exploration_growth(t)) / (m * n)) * (std::log(t) / n);
  return mean + p.sigma_g * std::sqrt(bonus_sq);
}

std::size_t select_arm(std::span<const double> indices) {
  if (indices.empty()) throw ArgumentError("select_arm needs at least one index");
  std::size_t best = 0;
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] > indices[best]) best = i;
  return best;
}

TeamState consensus_step(const TeamState& ts, const WeightMatrix& w, std::span<const std::size_t> pulls,
                         std::span<const double> rewards) {
  const auto m = ts.team_size();
  if (w.size() != m) throw ArgumentError("weight matrix dimension does not match team size");
  if (pulls.size() != m || rewards.size() != m) throw ArgumentError("pulls and rewards need one entry per agent");
  const auto arms = m == 0 ? 0 : ts.agents.front().n_hat.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (ts.agents[j].n_hat.size() != arms || ts.agents[j].s_hat.size() != arms)
      throw ArgumentError("agents disagree on the arm count");
    if (pulls[j] >= arms) throw ArgumentError("pulled arm out of range");
  }

  // Local update first: each agent adds its own observation.
  std::vector<AgentState> local = ts.agents;
  for (std::size_t j = 0; j < m; ++j) {
    local[j].n_hat[pulls[j]] += 1.0;
    local[j].s_hat[pulls[j]] += rewards[j];
  }

  TeamState next = TeamState::zeros(m, arms);
  next.t = ts.t + 1;
  for (std::size_t k = 0; k < m; ++k) {
    auto& out = next.agents[k];
    for (std::size_t j = 0; j < m; ++j) {
      const double wkj = w(k, j);
      if (wkj == 0.0) continue;
      for (std::size_t i = 0; i < arms; ++i) {
        out.n_hat[i] += wkj * local[j].n_hat[i];
        out.s_hat[i] += wkj * local[j].s_hat[i];
      }
    }
  }
  return next;
}

double estimated_mean(const AgentState& a, std::size_t arm) {
  if (arm >= a.n_hat.size()) throw ArgumentError("arm index out of range");
  if (a.n_hat[arm] <= 0.0) throw NotEstimableError("arm has no positive pull estimate yet");
  return a.s_hat[arm] / a.n_hat[arm];
}

}  // namespace mamab
