#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "unisample/index_set.hpp"

namespace unisample {

/// SplitMix64 (Steele, Lea and Flood). Small, fast and identical on every
/// platform, which is all the experiments need.
class SplitMix64 {
 public:
  static constexpr const char* kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for one trial, a function of (seed, trial) only.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform on [0, bound), bound >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair();

 private:
  std::uint64_t state_;
};

/// Uniform random s-subset of [0, n-1] by a partial Fisher-Yates shuffle.
IndexSet random_subset(Index n, Index s, SplitMix64& rng);

}  // namespace unisample
