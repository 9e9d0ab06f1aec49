#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace unisample {

using Index = std::int64_t;

/// Largest ambient size accepted anywhere in the library.
inline constexpr Index kMaxModulus = Index{1} << 40;

bool is_prime(Index n);

/// The ambient size N = p^M with p prime and M >= 1.
///
/// Construction validates primality by trial division and rejects sizes
/// above kMaxModulus, so p^(M+1) always fits in an Index.
class PrimePowerModulus {
 public:
  PrimePowerModulus(Index p, int exponent);

  /// Factors n as p^M; throws std::invalid_argument when n is not a prime power.
  static PrimePowerModulus from_size(Index n);
  static std::optional<PrimePowerModulus> try_from_size(Index n);

  Index prime() const noexcept { return p_; }
  int exponent() const noexcept { return m_; }
  Index size() const noexcept { return n_; }

  /// p^k for 0 <= k <= M + 1.
  Index power(int k) const;

  std::string to_string() const;

  friend bool operator==(const PrimePowerModulus&, const PrimePowerModulus&) = default;

 private:
  Index p_;
  int m_;
  Index n_;
};

}  // namespace unisample
