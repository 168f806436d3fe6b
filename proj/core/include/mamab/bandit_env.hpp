#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mamab/rng.hpp"

namespace mamab {

/// Gaussian bandit: arm i pays Normal(arm_means[i], sigma_g^2).
class BanditModel {
 public:
  /// Throws ArgumentError with fewer than two arms, non-finite means, or a
  /// negative / non-finite sigma_g.
  BanditModel(std::vector<double> arm_means, double sigma_g);

  std::size_t arm_count() const noexcept { return means_.size(); }
  std::span<const double> arm_means() const noexcept { return means_; }
  double mean(std::size_t arm) const { return means_.at(arm); }
  double sigma_g() const noexcept { return sigma_g_; }

 private:
  std::vector<double> means_;
  double sigma_g_;
};

double sample_reward(const BanditModel& m, std::size_t arm, RngStream& rng);

/// argmax of the arm means, lowest index on ties.
std::size_t best_arm(const BanditModel& m) noexcept;

}  // namespace mamab
