#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms beyond its data types.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unisample/index_set.hpp"

namespace oracle {

using unisample::Index;
using unisample::IndexSet;
using Mask = std::uint32_t;

inline std::vector<Index> elements_of(Mask m) {
  std::vector<Index> out;
  for (Index i = 0; m; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

inline IndexSet to_set(Index n, Mask m) { return IndexSet(n, elements_of(m)); }

inline Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (Index i : s) m |= Mask{1} << i;
  return m;
}

inline Index ipow(Index p, int k) {
  Index r = 1;
  while (k-- > 0) r *= p;
  return r;
}

/// Counts per class mod p^k, straight from the definition.
inline std::vector<Index> class_counts(const std::vector<Index>& elems, Index modulus) {
  std::vector<Index> c(static_cast<std::size_t>(modulus), 0);
  for (Index e : elems) ++c[static_cast<std::size_t>(e % modulus)];
  return c;
}

/// Balanced classes at every level, written independently of the library.
inline bool balanced(const std::vector<Index>& elems, Index p, int m) {
  for (int k = 1; k <= m; ++k) {
    const auto c = class_counts(elems, ipow(p, k));
    if (*std::max_element(c.begin(), c.end()) - *std::min_element(c.begin(), c.end()) > 1) return false;
  }
  return true;
}

/// Rotation of an n-bit mask: the image of {x} is {x - t mod n}.
inline Mask shift_down(Mask m, Index n, Index t) {
  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  t %= n;
  if (t == 0) return m;
  return ((m >> t) | (m << (n - t))) & full;
}

inline Mask reflect(Mask m, Index n) {
  Mask out = 0;
  for (Index i = 0; i < n; ++i) {
    if (m & (Mask{1} << i)) out |= Mask{1} << ((n - i) % n);
  }
  return out;
}

/// Number of distinct dihedral orbits among d-subsets of Z_n, by direct
/// orbit enumeration over all 2^n masks. Returns counts indexed by d.
inline std::vector<std::uint64_t> bracelet_counts_by_orbits(Index n) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n + 1), 0);
  std::vector<char> seen(std::size_t{1} << n, 0);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (seen[m]) continue;
    ++out[static_cast<std::size_t>(std::popcount(m))];
    for (int r = 0; r < 2; ++r) {
      const Mask base = r ? reflect(m, n) : m;
      for (Index t = 0; t < n; ++t) seen[shift_down(base, n, t)] = 1;
    }
  }
  return out;
}

/// p-adic valuation of prod_{i<j} (m_j - m_i), from the actual product.
inline Index product_valuation(const std::vector<Index>& elems, Index p) {
  boost::multiprecision::cpp_int prod = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) prod *= elems[j] - elems[i];
  }
  Index v = 0;
  while (prod != 0 && prod % p == 0) {
    prod /= p;
    ++v;
  }
  return v;
}

/// Largest universal subset size of `m`, by trying every submask.
inline Index brute_maximal(Mask m, const std::vector<char>& universal_table) {
  Index best = 0;
  for (Mask s = m;; s = (s - 1) & m) {
    if (universal_table[s]) best = std::max<Index>(best, std::popcount(s));
    if (s == 0) break;
  }
  return best;
}

/// Dense DFT by definition: (Ff)(k) = sum_j f(j) exp(-2 pi i jk / n).
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& f) {
  const auto n = static_cast<Index>(f.size());
  std::vector<std::complex<double>> out(f.size());
  for (Index k = 0; k < n; ++k) {
    std::complex<double> acc = 0;
    for (Index j = 0; j < n; ++j) {
      acc += f[static_cast<std::size_t>(j)] *
             std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n));
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

/// X + Y mod n on bitmasks.
inline Mask sumset_mask(Mask x, Mask y, Index n) {
  Mask out = 0;
  for (Index i = 0; x; ++i, x >>= 1) {
    if (x & 1U) out |= shift_down(y, n, (n - i) % n);
  }
  return out;
}

}  // namespace oracle
