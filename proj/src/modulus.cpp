#include "unisample/modulus.hpp"

#include <stdexcept>

namespace unisample {

bool is_prime(Index n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Index f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimePowerModulus::PrimePowerModulus(Index p, int exponent) : p_(p), m_(exponent), n_(1) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus base " + std::to_string(p) + " is not prime");
  }
  if (exponent < 1) {
    throw std::invalid_argument("modulus exponent must be >= 1, got " + std::to_string(exponent));
  }
  for (int k = 0; k < exponent; ++k) {
    if (n_ > kMaxModulus / p) {
      throw std::invalid_argument("modulus " + std::to_string(p) + "^" + std::to_string(exponent) +
                                  " exceeds the supported size");
    }
    n_ *= p;
  }
}

std::optional<PrimePowerModulus> PrimePowerModulus::try_from_size(Index n) {
  if (n < 2 || n > kMaxModulus) return std::nullopt;
  Index p = 0;
  for (Index f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return PrimePowerModulus(n, 1);
  int m = 0;
  Index rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePowerModulus(p, m);
}

PrimePowerModulus PrimePowerModulus::from_size(Index n) {
  auto m = try_from_size(n);
  if (!m) {
    throw std::invalid_argument("N = " + std::to_string(n) +
                                " is not a prime power; the multiset criteria only apply to N = p^M "
                                "(use the brute-force rank oracle for composite N)");
  }
  return *m;
}

Index PrimePowerModulus::power(int k) const {
  if (k < 0 || k > m_ + 1) {
    throw std::invalid_argument("level " + std::to_string(k) + " outside [0, M+1]");
  }
  Index r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

std::string PrimePowerModulus::to_string() const {
  return std::to_string(p_) + "^" + std::to_string(m_) + " = " + std::to_string(n_);
}

}  // namespace unisample
