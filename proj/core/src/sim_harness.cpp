#include "mamab/sim_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "mamab/errors.hpp"

namespace mamab {

void ExperimentConfig::validate() const {
  if (horizon < 1) throw ArgumentError("horizon must be >= 1");
  if (n_trials < 1) throw ArgumentError("n_trials must be >= 1");
  effective_algo().validate();
}

AlgoParams ExperimentConfig::effective_algo() const {
  AlgoParams p = algo;
  p.sigma_g = bandit.sigma_g();
  return p;
}

double team_error(const TeamState& ts, const BanditModel& m) {
  if (ts.agents.empty()) return 0.0;
  const auto star = best_arm(m);
  const double mu_star = m.mean(star);
  double total = 0.0;
  for (const auto& agent : ts.agents) {
    const double estimate = agent.n_hat[star] > 0.0 ? agent.s_hat[star] / agent.n_hat[star] : 0.0;
    total += std::abs(estimate - mu_star);
  }
  return total / static_cast<double>(ts.agents.size());
}

TrialResult run_trial(const ExperimentConfig& cfg, const WeightMatrix& weights, std::size_t trial,
                      const RoundObserver& observer) {
  cfg.validate();
  const auto algo = cfg.effective_algo();
  const auto& bandit = cfg.bandit;
  const auto team = weights.size();
  const auto arms = bandit.arm_count();
  const double mu_star = bandit.mean(best_arm(bandit));
  const SeededRng rng(cfg.seed);

  TrialResult result;
  result.error_curve.reserve(cfg.horizon);
  result.regret_curve.reserve(cfg.horizon);

  TeamState ts = TeamState::zeros(team, arms);
  std::vector<std::size_t> pulls(team);
  std::vector<double> rewards(team);
  std::vector<double> indices(arms);
  double regret = 0.0;

  for (std::size_t round = 1; round <= cfg.horizon; ++round) {
    const std::uint64_t t = ts.t + 1;
    const auto t_real = static_cast<double>(t);
    for (std::size_t k = 0; k < team; ++k) {
      const auto& agent = ts.agents[k];
      for (std::size_t i = 0; i < arms; ++i) {
        if (agent.n_hat[i] < 0.0) ++result.negative_count_events;
        indices[i] = ucb_index(agent, i, t_real, algo, team);
      }
      pulls[k] = select_arm(indices);
      auto stream = rng.stream(trial, k, t);
      rewards[k] = sample_reward(bandit, pulls[k], stream);
      regret += mu_star - bandit.mean(pulls[k]);
    }
    ts = consensus_step(ts, weights, pulls, rewards);
    result.error_curve.push_back(team_error(ts, bandit));
    result.regret_curve.push_back(regret);
    if (observer) observer(ts, pulls, rewards);
  }
  return result;
}

TrialResult run_trial(const ExperimentConfig& cfg, const StrategySpec& strategy, std::size_t trial) {
  const auto topology = build_topology(cfg.topology);
  return run_trial(cfg, build_weights(topology, strategy), trial);
}

std::vector<std::optional<std::size_t>> convergence_time(std::span<const std::vector<double>> mean_error_curves) {
  if (mean_error_curves.empty()) throw ArgumentError("convergence_time needs at least one curve");
  const auto length = mean_error_curves.front().size();
  if (length == 0) throw ArgumentError("error curves must be non-empty");
  double largest_final = -std::numeric_limits<double>::infinity();
  for (const auto& curve : mean_error_curves) {
    if (curve.size() != length) throw ArgumentError("error curves must have equal lengths");
    largest_final = std::max(largest_final, curve.back());
  }
  const double threshold = kConvergenceFraction * largest_final;

  std::vector<std::optional<std::size_t>> times;
  times.reserve(mean_error_curves.size());
  for (const auto& curve : mean_error_curves) {
    auto hit = std::find_if(curve.begin(), curve.end(), [&](double e) { return e <= threshold; });
    times.push_back(hit == curve.end() ? std::nullopt
                                       : std::optional<std::size_t>(static_cast<std::size_t>(hit - curve.begin()) + 1));
  }
  return times;
}

namespace {

void aggregate(StrategySweep& s, std::size_t horizon) {
  const auto n = s.trials.size();
  s.mean_error.assign(horizon, 0.0);
  s.std_error.assign(horizon, 0.0);
  s.mean_regret.assign(horizon, 0.0);
  for (const auto& trial : s.trials) {
    for (std::size_t t = 0; t < horizon; ++t) {
      s.mean_error[t] += trial.error_curve[t];
      s.mean_regret[t] += trial.regret_curve[t];
    }
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < horizon; ++t) {
    s.mean_error[t] *= inv_n;
    s.mean_regret[t] *= inv_n;
  }
  if (n > 1) {
    for (const auto& trial : s.trials)
      for (std::size_t t = 0; t < horizon; ++t) {
        const double d = trial.error_curve[t] - s.mean_error[t];
        s.std_error[t] += d * d;
      }
    for (auto& v : s.std_error) v = std::sqrt(v / static_cast<double>(n - 1));
  }
  s.final_error = s.mean_error.back();
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t jobs) {
  cfg.validate();
  if (cfg.strategies.empty()) throw ArgumentError("sweep needs at least one strategy");
  SweepResult out{build_topology(cfg.topology), {}};

  std::vector<WeightMatrix> weights;
  weights.reserve(cfg.strategies.size());
  for (const auto& spec : cfg.strategies) {
    weights.push_back(build_weights(out.topology, spec));
    StrategySweep s;
    s.strategy = spec;
    s.slem = slem(weights.back());
    s.trials.resize(cfg.n_trials);
    out.strategies.push_back(std::move(s));
  }

  const std::size_t total = cfg.strategies.size() * cfg.n_trials;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const auto si = task / cfg.n_trials;
      const auto trial = task % cfg.n_trials;
      try {
        out.strategies[si].trials[trial] = run_trial(cfg, weights[si], trial);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const auto n_threads = std::clamp<std::size_t>(jobs, 1, total);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::vector<double>> curves;
  for (auto& s : out.strategies) {
    aggregate(s, cfg.horizon);
    curves.push_back(s.mean_error);
  }
  const auto times = convergence_time(curves);
  for (std::size_t i = 0; i < out.strategies.size(); ++i) out.strategies[i].convergence_time = times[i];
  return out;
}

}  // namespace mamab
