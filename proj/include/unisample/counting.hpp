#pragma once

#include <cstdint>
#include <vector>

#include "unisample/bigint.hpp"
#include "unisample/errors.hpp"
#include "unisample/modulus.hpp"

namespace unisample {

/// d = alpha_1 p^(M-1) + ... + alpha_M, with suffixes
/// d_i = sum_{j>i} alpha_j p^(M-j), so d_0 = d and d_M = 0.
struct BasePExpansion {
  Index d = 0;
  std::vector<int> digits;      ///< alpha_1 .. alpha_M, most significant first
  std::vector<Index> suffixes;  ///< d_0 .. d_M

  static BasePExpansion of(Index d, const PrimePowerModulus& modulus);
};

/// Number of universal d-subsets of [0, N-1]:
/// prod_i C(p, alpha_i + 1)^(d_i) C(p, alpha_i)^(p^(M-i) - d_i).
BigInt count_universal(Index d, const PrimePowerModulus& modulus);

/// Counts universal d-subsets one by one. Throws BudgetExceeded when
/// C(N, d) > budget. Work is split over `threads` workers; the total does not
/// depend on the split.
BigInt count_by_brute_force(Index d, const PrimePowerModulus& modulus,
                            std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

struct EntropyPoint {
  double alpha = 0;
  Index d = 0;
  double normalized_log_count = 0;  ///< log C(d, p^M) / p^M
};

/// log C(floor(alpha p^M), p^M) / p^M at `resolution` equally spaced alpha in [0, 1].
std::vector<EntropyPoint> entropy_curve(Index p, int exponent, int resolution);

}  // namespace unisample
