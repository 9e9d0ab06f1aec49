#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "unisample/counting.hpp"
#include "unisample/errors.hpp"

using namespace unisample;

TEST_CASE("base-p expansion") {
  const PrimePowerModulus m(3, 3);
  for (Index d = 0; d <= 27; ++d) {
    const auto e = BasePExpansion::of(d, m);
    Index total = 0;
    for (int i = 1; i <= 3; ++i) total += e.digits[static_cast<std::size_t>(i - 1)] * m.power(3 - i);
    CHECK(total == d);
    CHECK(e.suffixes.front() == d);
    CHECK(e.suffixes.back() == 0);
    for (int i = 0; i <= 3; ++i) {
      Index suffix = 0;
      for (int j = i + 1; j <= 3; ++j) suffix += e.digits[static_cast<std::size_t>(j - 1)] * m.power(3 - j);
      CHECK(e.suffixes[static_cast<std::size_t>(i)] == suffix);
    }
  }
  CHECK(BasePExpansion::of(7, PrimePowerModulus(3, 2)).digits == std::vector<int>{2, 1});
  CHECK_THROWS_AS(BasePExpansion::of(28, m), std::invalid_argument);
}

TEST_CASE("count_universal closed-form values") {
  CHECK(count_universal(4, PrimePowerModulus(2, 3)) == 16);
  CHECK(count_universal(0, PrimePowerModulus(2, 3)) == 1);
  CHECK(count_universal(8, PrimePowerModulus(2, 3)) == 1);
  CHECK(count_universal(7, PrimePowerModulus(3, 2)) == 27);
  CHECK(count_universal(8, PrimePowerModulus(2, 4)) == 256);
  CHECK_THROWS_AS(count_universal(9, PrimePowerModulus(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(count_universal(-1, PrimePowerModulus(2, 3)), std::invalid_argument);

  // d = p^k < N gives (N/d)^d.
  for (const auto& m : {PrimePowerModulus(2, 6), PrimePowerModulus(3, 4), PrimePowerModulus(5, 3)}) {
    for (int k = 0; k < m.exponent(); ++k) {
      const Index d = m.power(k);
      CHECK(count_universal(d, m) == big_pow(m.size() / d, static_cast<std::uint64_t>(d)));
    }
  }
  // N/2 = 2^(M-1) gives 2^(N/2).
  for (int m = 1; m <= 10; ++m) {
    const PrimePowerModulus mod(2, m);
    CHECK(count_universal(mod.size() / 2, mod) == big_pow(2, static_cast<std::uint64_t>(mod.size() / 2)));
  }
}

TEST_CASE("count_universal structural identities") {
  for (const auto& m : {PrimePowerModulus(2, 5), PrimePowerModulus(3, 3), PrimePowerModulus(5, 2),
                        PrimePowerModulus(7, 2), PrimePowerModulus(2, 8)}) {
    const Index n = m.size();
    const Index p = m.prime();
    for (Index d = 0; d <= n; ++d) {
      const auto c = count_universal(d, m);
      CHECK(c == count_universal(n - d, m));
      CHECK(c >= 1);
      CHECK(c <= big_binomial(n, d));
      // Peel off the top digit: C(d, p^M) = C(p, a1+1)^d1 C(p, a1)^(p^(M-1) - d1) C(d1, p^(M-1)).
      if (m.exponent() >= 2) {
        const PrimePowerModulus lower(p, m.exponent() - 1);
        const auto e = BasePExpansion::of(d, m);
        const Index a1 = e.digits[0];
        const Index d1 = e.suffixes[1];
        const BigInt rhs = big_pow(big_binomial(p, a1 + 1), static_cast<std::uint64_t>(d1)) *
                           big_pow(big_binomial(p, a1), static_cast<std::uint64_t>(lower.size() - d1)) *
                           count_universal(d1, lower);
        CHECK(c == rhs);
        if (d < lower.size()) CHECK(c == big_pow(p, static_cast<std::uint64_t>(d)) * count_universal(d, lower));
      }
    }
  }
  // Prime N: every set is universal.
  for (Index p : {2, 3, 5, 7, 11, 13}) {
    const PrimePowerModulus m(p, 1);
    for (Index d = 0; d <= p; ++d) CHECK(count_universal(d, m) == big_binomial(p, d));
  }
}

TEST_CASE("brute-force counts match the product formula") {
  for (const auto& m : {PrimePowerModulus(2, 3), PrimePowerModulus(3, 2), PrimePowerModulus(2, 4),
                        PrimePowerModulus(5, 2), PrimePowerModulus(3, 3)}) {
    for (Index d = 0; d <= m.size(); ++d) {
      const auto subsets = binomial_u64(static_cast<std::uint64_t>(m.size()), static_cast<std::uint64_t>(d));
      if (subsets > kDefaultBudget) {
        CHECK_THROWS_AS(count_by_brute_force(d, m), BudgetExceeded);
        continue;
      }
      CHECK(count_by_brute_force(d, m) == count_universal(d, m));
    }
  }
  CHECK(count_by_brute_force(4, PrimePowerModulus(2, 3)) == 16);
  CHECK(count_by_brute_force(16, PrimePowerModulus(2, 4)) == 1);
  CHECK(count_by_brute_force(8, PrimePowerModulus(2, 4)) == 256);
}

TEST_CASE("brute-force count is independent of the thread count") {
  const PrimePowerModulus m(2, 4);
  for (Index d : {3, 7, 8, 12}) {
    const auto one = count_by_brute_force(d, m, kDefaultBudget, 1);
    CHECK(count_by_brute_force(d, m, kDefaultBudget, 3) == one);
    CHECK(count_by_brute_force(d, m, kDefaultBudget, 8) == one);
  }
  CHECK_THROWS_AS(count_by_brute_force(8, m, 100), BudgetExceeded);
}

TEST_CASE("entropy curve") {
  CHECK_THROWS_AS(entropy_curve(2, 4, 1), std::invalid_argument);
  const auto curve = entropy_curve(2, 10, 65);
  REQUIRE(curve.size() == 65);
  CHECK(curve.front().normalized_log_count == 0.0);
  CHECK(curve.back().normalized_log_count == 0.0);
  CHECK(curve.front().alpha == 0.0);
  CHECK(curve.back().alpha == 1.0);
  const Index n = 1024;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& a = curve[i];
    const auto& b = curve[curve.size() - 1 - i];
    if (a.d + b.d == n) CHECK(a.normalized_log_count == doctest::Approx(b.normalized_log_count).epsilon(1e-12));
    CHECK(a.normalized_log_count >= 0.0);
    CHECK(a.normalized_log_count <= std::log(2.0) + 1e-12);
  }

  // Self-similarity: for d < p^(M-1), log C(d, p^M) = d log p + log C(d, p^(M-1)).
  for (const auto& [p, m] : std::vector<std::pair<Index, int>>{{2, 9}, {3, 5}}) {
    const PrimePowerModulus hi(p, m), lo(p, m - 1);
    for (Index d = 0; d < lo.size(); d += 7) {
      const double lhs = natural_log(count_universal(d, hi));
      const double rhs = static_cast<double>(d) * std::log(static_cast<double>(p)) + natural_log(count_universal(d, lo));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("entropy curve stabilizes as M grows") {
  const int resolution = 33;
  auto prev = entropy_curve(2, 6, resolution);
  for (int m = 7; m <= 14; ++m) {
    const auto cur = entropy_curve(2, m, resolution);
    for (int i = 0; i < resolution; ++i) {
      CHECK(std::abs(cur[static_cast<std::size_t>(i)].normalized_log_count -
                     prev[static_cast<std::size_t>(i)].normalized_log_count) < 0.05);
    }
    prev = cur;
  }
}
