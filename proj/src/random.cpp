#include "unisample/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace unisample {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(mix(seed) ^ mix((trial + 1) * kGamma));
}

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % bound;
  }
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::pair<double, double> SplitMix64::normal_pair() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

IndexSet random_subset(Index n, Index s, SplitMix64& rng) {
  if (s < 0 || s > n) throw std::invalid_argument("subset size outside [0, n]");
  std::vector<Index> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index i = 0; i < s; ++i) {
    const auto j = i + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(s));
  return IndexSet(n, std::move(pool));
}

}  // namespace unisample
