#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unisample/fourier.hpp"
#include "unisample/index_set.hpp"
#include "unisample/modulus.hpp"

namespace unisample {

/// Relative zero threshold used when no tolerance is given.
inline constexpr double kDefaultZeroTolerance = 1e-9;

struct SupportProfile {
  Signal signal;
  IndexSet support;
  IndexSet zero_set;
  double tolerance = 0;  ///< |value| <= tolerance counts as zero
};

/// Splits [0, N-1] into support and zero set. Without an explicit tolerance
/// the threshold is kDefaultZeroTolerance * max |value|.
SupportProfile support_profile(const Signal& signal, std::optional<double> tolerance = std::nullopt);

/// One inequality (or identity) between two integer quantities.
struct BoundCheck {
  std::string name;
  Index lhs = 0;
  std::string relation;  ///< ">=" or "=="
  Index rhs = 0;
  bool pass = false;
};

struct UncertaintyReport {
  SupportProfile time;       ///< f
  SupportProfile frequency;  ///< Ff
  Index omega_zero_time = 0;        ///< |Omega(Z(f))|
  Index omega_zero_frequency = 0;   ///< |Omega(Z(Ff))|
  Index phi_support_time = 0;       ///< |Phi(supp f)|
  Index phi_support_frequency = 0;  ///< |Phi(supp Ff)|
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

/// Checks |supp Ff| >= 1 + |Omega(Z(f))|, |Z(Ff)| + 1 <= |Phi(supp f)| and
/// their mirror images with f and Ff swapped, plus the identity
/// |Phi(supp f)| = N - |Omega(Z(f))|. At prime N it also checks
/// |supp f| + |supp Ff| >= N + 1. Throws on the zero signal.
///
/// An explicit tolerance is absolute and used for both f and Ff; otherwise
/// each side gets its own relative threshold.
UncertaintyReport verify_uncertainty(const Signal& signal, const PrimePowerModulus& modulus,
                                     std::optional<double> tolerance = std::nullopt);

struct TrialRecord {
  std::uint64_t index = 0;
  Index statistic = 0;
  bool pass = false;
};

struct RandomExperimentSummary {
  std::string experiment;
  std::string rng = "splitmix64";
  std::uint64_t seed = 0;
  Index n = 0;
  Index size = 0;        ///< s for random sets, r for random signals
  Index d = 0;           ///< target maximal size (random sets only)
  double delta = 0;
  double lambda = 0;     ///< (N - s) / N (random sets only)
  double a = 0;          ///< a_{N, delta} (random signals only)
  double threshold = 0;  ///< statistic needed for a trial to pass
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double empirical_probability = 0;
  double theoretical_bound = 0;
  double slack = 0;  ///< 3 sigma of a binomial at the bound
  bool passed = false;
  std::vector<TrialRecord> records;
};

/// Left and right sides of N log(1/lambda) >= (1 + delta) d log d.
struct SizeCondition {
  double lhs = 0;
  double rhs = 0;
  bool holds() const { return lhs >= rhs; }
};
SizeCondition random_set_condition(Index n, Index s, Index d, double delta);

/// Largest d satisfying random_set_condition (at least 1 when s >= 1).
Index largest_admissible_d(Index n, Index s, double delta);

/// Draws `trials` uniform s-subsets and counts those whose maximal universal
/// subset has at least d elements. Refuses parameters violating the size
/// condition. Each trial has its own random stream, so the outcome does not
/// depend on `threads`.
RandomExperimentSummary random_maximal_experiment(const PrimePowerModulus& modulus, Index s, Index d,
                                                  double delta, std::uint64_t trials,
                                                  std::uint64_t seed, unsigned threads = 1);

/// a_{N, delta} = N / ((1 + delta) log N) * (1 + log(1 + delta) + log log N).
double a_n_delta(Index n, double delta);

/// Random signals with r Gaussian coefficients on a uniform random support;
/// a trial passes when |supp g| + |supp Fg| >= 1 + a_{N, delta}. Refuses
/// r >= a_{N, delta}.
RandomExperimentSummary random_signal_uncertainty(Index n, Index r, double delta,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  unsigned threads = 1);

/// {x + y mod N}.
IndexSet sumset(const IndexSet& x, const IndexSet& y);

/// {h : h + S = S}, a subgroup of Z_N.
IndexSet periods(const IndexSet& set);

struct SumsetReport {
  IndexSet sum;
  bool x_universal = false;
  bool y_universal = false;
  /// Either set universal, both nonempty and |X| + |Y| - 1 <= N.
  bool theorem_applies = false;
  Index theorem_bound = 0;  ///< |X| + |Y| - 1
  bool theorem_pass = true;
  Index omega_x = 0;
  Index omega_y = 0;
  /// min(N, max(|Omega(X)| + |Y| - 1, |X| + |Omega(Y)| - 1)); 0 if a set is empty.
  Index corollary_bound = 0;
  bool corollary_pass = true;
};

SumsetReport cauchy_davenport_check(const IndexSet& x, const IndexSet& y,
                                    const PrimePowerModulus& modulus);

}  // namespace unisample
