#include "mamab/bandit_env.hpp"

#include <algorithm>
#include <cmath>

#include "mamab/errors.hpp"

namespace mamab {

BanditModel::BanditModel(std::vector<double> arm_means, double sigma_g)
    : means_(std::move(arm_means)), sigma_g_(sigma_g) {
  if (means_.size() < 2) throw ArgumentError("bandit needs at least two arms");
  if (!std::all_of(means_.begin(), means_.end(), [](double x) { return std::isfinite(x); }))
    throw ArgumentError("arm means must be finite");
  if (!std::isfinite(sigma_g_) || sigma_g_ < 0.0) throw ArgumentError("sigma_g must be finite and >= 0");
}

double sample_reward(const BanditModel& m, std::size_t arm, RngStream& rng) {
  if (arm >= m.arm_count()) throw ArgumentError("arm index out of range");
  return m.mean(arm) + m.sigma_g() * rng.normal();
}

std::size_t best_arm(const BanditModel& m) noexcept {
  const auto means = m.arm_means();
  // max_element returns the first maximum.
  return static_cast<std::size_t>(std::max_element(means.begin(), means.end()) - means.begin());
}

}  // namespace mamab
