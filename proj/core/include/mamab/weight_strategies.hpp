#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mamab/graph_core.hpp"

namespace mamab {

enum class StrategyKind {
  manual_constant,
  max_degree,
  local_degree,
  metropolis_hastings,
  best_constant,
  fdla_optimized,
};

std::string_view to_string(StrategyKind kind) noexcept;
/// Throws ArgumentError for names outside the six-strategy roster.
StrategyKind parse_strategy_kind(std::string_view name);

using StrategyParams = std::map<std::string, double, std::less<>>;

/// A strategy name plus its numeric parameters.
struct StrategySpec {
  StrategyKind kind = StrategyKind::metropolis_hastings;
  StrategyParams params;

  /// Parses the name and checks that required parameters are present.
  static StrategySpec parse(std::string_view name, StrategyParams params = {});
  std::string_view name() const noexcept { return to_string(kind); }
};

struct FdlaParams {
  int max_iters = 500;
  double step_scale = 1.0;
  double tol = 1e-6;
  bool nonnegative = true;

  /// Missing keys keep their defaults. Throws ArgumentError on bad values.
  static FdlaParams from(const StrategyParams& params);
};

/// Best-so-far SLEM after each optimizer iteration (entry k-1 for iteration k).
struct OptimizationTrace {
  std::vector<double> best_slem;
};

struct FdlaResult {
  WeightMatrix weights;
  OptimizationTrace trace;
};

/// W = I - alpha L. Requires 0 < alpha <= 1/d_max.
WeightMatrix manual_constant_weights(const Topology& t, double alpha);
/// Every edge 1/(d_max + 1).
WeightMatrix max_degree_weights(const Topology& t);
/// Edge (i,j) gets 1/max(d_i, d_j).
WeightMatrix local_degree_weights(const Topology& t);
/// Edge (i,j) gets 1/(1 + max(d_i, d_j)).
WeightMatrix metropolis_hastings_weights(const Topology& t);
/// W = I - alpha* L with alpha* = 2 / (lambda_2(L) + lambda_max(L)).
WeightMatrix best_constant_weights(const Topology& t);
double best_constant_alpha(const Topology& t);

/// Minimizes SLEM over per-edge weights by projected subgradient descent.
///
/// Starts from the best-constant weights and returns the best iterate seen,
/// so slem(result) <= slem(best_constant_weights(t)). With nonnegative set,
/// negative edge weights are clipped to zero after each step and any row
/// whose incident weights sum past one is scaled back onto the boundary.
FdlaResult fdla_optimize(const Topology& t, const FdlaParams& params = {});

WeightMatrix build_weights(const Topology& t, const StrategySpec& spec);

}  // namespace mamab
