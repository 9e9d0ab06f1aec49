#include "unisample/bigint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unisample {

BigInt big_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

double natural_log(const BigInt& value) {
  if (value <= 0) throw std::domain_error("natural_log of a non-positive integer");
  const auto bits = boost::multiprecision::msb(value);
  // Keep the top 62 bits as a double mantissa; the dropped tail perturbs the
  // result by at most 2^-61 relative.
  if (bits < 62) return std::log(value.convert_to<double>());
  const auto shift = bits - 61;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
  std::int64_t result = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace unisample
