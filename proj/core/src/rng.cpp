#include "mamab/rng.hpp"

#include <cmath>
#include <numbers>

namespace mamab {

std::uint64_t RngStream::next_u64() noexcept {
  ++counter_;
  return mix64(key_ ^ mix64(counter_));
}

double RngStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() noexcept {
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream SeededRng::stream(std::uint64_t trial, std::uint64_t agent, std::uint64_t timestep) const noexcept {
  std::uint64_t key = mix64(seed_);
  key = mix64(key ^ trial);
  key = mix64(key ^ agent);
  key = mix64(key ^ timestep);
  return RngStream(key);
}

}  // namespace mamab
