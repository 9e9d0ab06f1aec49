#include "unisample/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "unisample/index_set.hpp"

namespace unisample {

namespace {

void check_cardinality(Index d, const PrimePowerModulus& modulus) {
  if (d < 0 || d > modulus.size()) {
    throw std::invalid_argument("cardinality " + std::to_string(d) + " outside [0, " +
                                std::to_string(modulus.size()) + "]");
  }
}

// Balanced-classes test on a sorted element list, with reusable scratch.
class FastChecker {
 public:
  explicit FastChecker(const PrimePowerModulus& modulus)
      : modulus_(modulus), counts_(static_cast<std::size_t>(modulus.size()), 0) {}

  bool universal(std::span<const Index> elements) {
    for (int k = 1; k <= modulus_.exponent(); ++k) {
      const Index width = modulus_.power(k);
      std::fill_n(counts_.begin(), width, 0);
      for (Index e : elements) ++counts_[static_cast<std::size_t>(e % width)];
      const auto [lo, hi] = std::minmax_element(counts_.begin(), counts_.begin() + width);
      if (*hi - *lo > 1) return false;
    }
    return true;
  }

 private:
  PrimePowerModulus modulus_;
  std::vector<Index> counts_;
};

// Visits d-subsets of [0, n-1] whose smallest element is `first`.
std::uint64_t count_with_first(Index first, Index d, const PrimePowerModulus& modulus,
                               FastChecker& checker) {
  const Index n = modulus.size();
  std::vector<Index> c(static_cast<std::size_t>(d));
  c[0] = first;
  for (Index i = 1; i < d; ++i) c[static_cast<std::size_t>(i)] = first + i;
  std::uint64_t hits = 0;
  while (true) {
    if (checker.universal(c)) ++hits;
    Index i = d - 1;
    while (i >= 1 && c[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 1) break;
    ++c[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < d; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return hits;
}

}  // namespace

BasePExpansion BasePExpansion::of(Index d, const PrimePowerModulus& modulus) {
  check_cardinality(d, modulus);
  const int m = modulus.exponent();
  BasePExpansion out;
  out.d = d;
  out.digits.resize(static_cast<std::size_t>(m));
  out.suffixes.resize(static_cast<std::size_t>(m + 1));
  // d = N has a single digit p at the top; it is handled by the product
  // formula as alpha_1 = p with all lower digits zero.
  Index rest = d;
  for (int i = 1; i <= m; ++i) {
    const Index place = modulus.power(m - i);
    Index digit = rest / place;
    if (i > 1) digit = std::min(digit, modulus.prime() - 1);
    out.digits[static_cast<std::size_t>(i - 1)] = static_cast<int>(digit);
    rest -= digit * place;
  }
  out.suffixes[0] = d;
  for (int i = 1; i <= m; ++i) out.suffixes[static_cast<std::size_t>(i)] = d % modulus.power(m - i);
  return out;
}

BigInt count_universal(Index d, const PrimePowerModulus& modulus) {
  const auto e = BasePExpansion::of(d, modulus);
  const Index p = modulus.prime();
  const int m = modulus.exponent();
  BigInt total = 1;
  for (int i = 1; i <= m; ++i) {
    const Index alpha = e.digits[static_cast<std::size_t>(i - 1)];
    const Index di = e.suffixes[static_cast<std::size_t>(i)];
    const Index classes = modulus.power(m - i);
    total *= big_pow(big_binomial(p, alpha + 1), static_cast<std::uint64_t>(di));
    total *= big_pow(big_binomial(p, alpha), static_cast<std::uint64_t>(classes - di));
  }
  return total;
}

BigInt count_by_brute_force(Index d, const PrimePowerModulus& modulus, std::uint64_t budget,
                            unsigned threads) {
  check_cardinality(d, modulus);
  const Index n = modulus.size();
  const std::uint64_t total = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
  if (total > budget) throw BudgetExceeded(total, budget);
  if (d == 0) return 1;

  threads = std::max(1U, threads);
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned t) {
    FastChecker checker(modulus);
    for (Index first = t; first <= n - d; first += threads) {
      partial[t] += count_with_first(first, d, modulus, checker);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  BigInt sum = 0;
  for (auto v : partial) sum += v;
  return sum;
}

std::vector<EntropyPoint> entropy_curve(Index p, int exponent, int resolution) {
  if (resolution < 2 || resolution > (1 << 20)) {
    throw std::invalid_argument("resolution must lie in [2, 2^20]");
  }
  const PrimePowerModulus modulus(p, exponent);
  const Index n = modulus.size();
  std::vector<EntropyPoint> out;
  out.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    EntropyPoint pt;
    pt.alpha = static_cast<double>(i) / (resolution - 1);
    pt.d = static_cast<Index>(i) * n / (resolution - 1);
    pt.normalized_log_count = natural_log(count_universal(pt.d, modulus)) / static_cast<double>(n);
    out.push_back(pt);
  }
  return out;
}

}  // namespace unisample
