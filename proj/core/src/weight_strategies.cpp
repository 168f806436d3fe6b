#include "mamab/weight_strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mamab/errors.hpp"

namespace mamab {

namespace {

constexpr StrategyKind kAllStrategies[] = {
    StrategyKind::manual_constant,     StrategyKind::max_degree,    StrategyKind::local_degree,
    StrategyKind::metropolis_hastings, StrategyKind::best_constant, StrategyKind::fdla_optimized,
};

template <typename EdgeWeight>
WeightMatrix weights_from_rule(const Topology& t, EdgeWeight&& rule) {
  std::vector<double> w;
  w.reserve(t.edges().size());
  for (const auto& e : t.edges()) w.push_back(rule(e));
  return WeightMatrix::from_edge_weights(t, w);
}

// Clips negative weights, then pulls every over-full row back to unit
// incident mass by uniform scaling. Scaling a row only lowers its
// neighbours' sums, so a single pass in node order suffices.
void project_nonnegative(const Topology& t, const std::vector<std::vector<std::size_t>>& incident,
                         std::vector<double>& w) {
  for (auto& x : w) x = std::max(x, 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    double sum = 0.0;
    for (auto l : incident[i]) sum += w[l];
    if (sum > 1.0) {
      const double scale = 1.0 / sum;
      for (auto l : incident[i]) w[l] *= scale;
    }
  }
}

struct ExtremePair {
  double value;             // spectral norm of W - J/n
  bool positive_branch;     // lambda_max(W - J/n) is the active extreme
  std::vector<double> vec;  // unit eigenvector of the active extreme
};

ExtremePair extreme_eigenpair(const WeightMatrix& w) {
  const auto n = w.size();
  Matrix centered = w.entries();
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) centered(i, j) -= inv_n;
  const auto eig = symmetric_eigen(centered);
  const double top = eig.values.front();
  const double bottom = eig.values.back();
  // Ties go to the positive branch.
  const bool positive = top >= -bottom;
  const std::size_t col = positive ? 0 : n - 1;
  std::vector<double> vec(n);
  for (std::size_t i = 0; i < n; ++i) vec[i] = eig.vectors(i, col);
  return {std::max(std::abs(top), std::abs(bottom)), positive, std::move(vec)};
}

}  // namespace

std::string_view to_string(StrategyKind kind) noexcept {
  switch (kind) {
    case StrategyKind::manual_constant: return "manual_constant";
    case StrategyKind::max_degree: return "max_degree";
    case StrategyKind::local_degree: return "local_degree";
    case StrategyKind::metropolis_hastings: return "metropolis_hastings";
    case StrategyKind::best_constant: return "best_constant";
    case StrategyKind::fdla_optimized: return "fdla_optimized";
  }
  return "unknown";
}

StrategyKind parse_strategy_kind(std::string_view name) {
  for (auto k : kAllStrategies)
    if (to_string(k) == name) return k;
  throw ArgumentError("unknown weight strategy '" + std::string(name) + "'");
}

StrategySpec StrategySpec::parse(std::string_view name, StrategyParams params) {
  StrategySpec spec{parse_strategy_kind(name), std::move(params)};
  if (spec.kind == StrategyKind::manual_constant && !spec.params.contains("alpha"))
    throw ArgumentError("manual_constant requires parameter 'alpha'");
  if (spec.kind == StrategyKind::fdla_optimized) (void)FdlaParams::from(spec.params);
  return spec;
}

FdlaParams FdlaParams::from(const StrategyParams& params) {
  FdlaParams out;
  if (auto it = params.find("max_iters"); it != params.end()) {
    const double v = it->second;
    if (!(v >= 1.0) || v != std::floor(v) || v > std::numeric_limits<int>::max())
      throw ArgumentError("max_iters must be an integer >= 1");
    out.max_iters = static_cast<int>(v);
  }
  if (auto it = params.find("step_scale"); it != params.end()) {
    if (!(it->second > 0.0) || !std::isfinite(it->second)) throw ArgumentError("step_scale must be > 0");
    out.step_scale = it->second;
  }
  if (auto it = params.find("tol"); it != params.end()) {
    if (!(it->second >= 0.0) || !std::isfinite(it->second)) throw ArgumentError("tol must be >= 0");
    out.tol = it->second;
  }
  if (auto it = params.find("nonnegative"); it != params.end()) {
    if (it->second != 0.0 && it->second != 1.0) throw ArgumentError("nonnegative must be 0 or 1");
    out.nonnegative = it->second == 1.0;
  }
  return out;
}

WeightMatrix manual_constant_weights(const Topology& t, double alpha) {
  const auto d_max = static_cast<double>(t.max_degree());
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ArgumentError("alpha must be > 0");
  if (alpha * d_max > 1.0 + 1e-12) throw ArgumentError("alpha exceeds 1/d_max; diagonal would be negative");
  return weights_from_rule(t, [&](const Edge&) { return alpha; });
}

WeightMatrix max_degree_weights(const Topology& t) {
  const double w = 1.0 / (static_cast<double>(t.max_degree()) + 1.0);
  return weights_from_rule(t, [&](const Edge&) { return w; });
}

WeightMatrix local_degree_weights(const Topology& t) {
  return weights_from_rule(t, [&](const Edge& e) {
    return 1.0 / static_cast<double>(std::max(t.degree(e.u), t.degree(e.v)));
  });
}

WeightMatrix metropolis_hastings_weights(const Topology& t) {
  return weights_from_rule(t, [&](const Edge& e) {
    return 1.0 / (1.0 + static_cast<double>(std::max(t.degree(e.u), t.degree(e.v))));
  });
}

double best_constant_alpha(const Topology& t) {
  if (t.size() < 2) throw ArgumentError("best-constant weights need at least two nodes");
  const auto values = symmetric_eigenvalues(laplacian(t));
  const double lambda_max = values.front();
  const double lambda_2 = values[values.size() - 2];  // smallest nonzero: graph is connected
  return 2.0 / (lambda_2 + lambda_max);
}

WeightMatrix best_constant_weights(const Topology& t) {
  const double alpha = best_constant_alpha(t);
  return weights_from_rule(t, [&](const Edge&) { return alpha; });
}

FdlaResult fdla_optimize(const Topology& t, const FdlaParams& params) {
  if (params.max_iters < 1) throw ArgumentError("max_iters must be >= 1");
  if (!(params.step_scale > 0.0)) throw ArgumentError("step_scale must be > 0");
  if (!(params.tol >= 0.0)) throw ArgumentError("tol must be >= 0");

  const auto edges = t.edges();
  std::vector<std::vector<std::size_t>> incident(t.size());
  for (std::size_t l = 0; l < edges.size(); ++l) {
    incident[edges[l].u].push_back(l);
    incident[edges[l].v].push_back(l);
  }

  std::vector<double> w(edges.size(), best_constant_alpha(t));
  if (params.nonnegative) project_nonnegative(t, incident, w);

  std::vector<double> best_w = w;
  double best = std::numeric_limits<double>::infinity();
  OptimizationTrace trace;
  trace.best_slem.reserve(static_cast<std::size_t>(params.max_iters));
  std::vector<double> grad(edges.size());

  for (int k = 1; k <= params.max_iters; ++k) {
    const auto current = WeightMatrix::from_edge_weights(t, w);
    const auto extreme = extreme_eigenpair(current);
    if (extreme.value < best) {
      best = extreme.value;
      best_w = w;
    }
    trace.best_slem.push_back(best);
    if (k == params.max_iters) break;

    // d(u^T W u)/dw_l = -(u_i - u_j)^2 on the positive branch; the negative
    // branch minimizes -v^T W v and flips the sign.
    double norm_sq = 0.0;
    for (std::size_t l = 0; l < edges.size(); ++l) {
      const double diff = extreme.vec[edges[l].u] - extreme.vec[edges[l].v];
      grad[l] = extreme.positive_branch ? -diff * diff : diff * diff;
      norm_sq += grad[l] * grad[l];
    }
    if (std::sqrt(norm_sq) <= params.tol) break;

    const double step = params.step_scale / std::sqrt(static_cast<double>(k));
    for (std::size_t l = 0; l < edges.size(); ++l) w[l] -= step * grad[l];
    if (params.nonnegative) project_nonnegative(t, incident, w);
  }

  return FdlaResult{WeightMatrix::from_edge_weights(t, best_w), std::move(trace)};
}

WeightMatrix build_weights(const Topology& t, const StrategySpec& spec) {
  switch (spec.kind) {
    case StrategyKind::manual_constant: {
      auto it = spec.params.find("alpha");
      if (it == spec.params.end()) throw ArgumentError("manual_constant requires parameter 'alpha'");
      return manual_constant_weights(t, it->second);
    }
    case StrategyKind::max_degree: return max_degree_weights(t);
    case StrategyKind::local_degree: return local_degree_weights(t);
    case StrategyKind::metropolis_hastings: return metropolis_hastings_weights(t);
    case StrategyKind::best_constant: return best_constant_weights(t);
    case StrategyKind::fdla_optimized: return fdla_optimize(t, FdlaParams::from(spec.params)).weights;
  }
  throw ArgumentError("unknown weight strategy");
}

}  // namespace mamab
