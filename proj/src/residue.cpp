#include "unisample/residue.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace unisample {

namespace {

void require_same_modulus(const IndexSet& set, const PrimePowerModulus& modulus) {
  if (set.n() != modulus.size()) {
    throw std::invalid_argument("index set lives in Z_" + std::to_string(set.n()) +
                                " but the modulus is " + modulus.to_string());
  }
}

}  // namespace

LevelTable::LevelTable(PrimePowerModulus modulus, std::vector<std::vector<Index>> levels)
    : modulus_(modulus), levels_(std::move(levels)) {
  if (static_cast<int>(levels_.size()) != modulus_.exponent() + 1) {
    throw std::invalid_argument("level table needs M+1 levels");
  }
  for (int k = 0; k <= modulus_.exponent(); ++k) {
    if (static_cast<Index>(levels_[static_cast<std::size_t>(k)].size()) != modulus_.power(k)) {
      throw std::invalid_argument("level " + std::to_string(k) + " must have p^k entries");
    }
  }
}

std::span<const Index> LevelTable::level(int k) const {
  if (k < 0 || k >= levels()) throw std::out_of_range("level " + std::to_string(k));
  return levels_[static_cast<std::size_t>(k)];
}

Index LevelTable::at(int k, Index a) const {
  auto l = level(k);
  if (a < 0 || a >= static_cast<Index>(l.size())) {
    throw std::out_of_range("residue " + std::to_string(a) + " at level " + std::to_string(k));
  }
  return l[static_cast<std::size_t>(a)];
}

std::vector<Index> LevelTable::sorted_level(int k) const {
  auto l = level(k);
  std::vector<Index> v(l.begin(), l.end());
  std::sort(v.begin(), v.end());
  return v;
}

ResidueHistogram residue_histogram(const IndexSet& set, const PrimePowerModulus& modulus) {
  require_same_modulus(set, modulus);
  const int m = modulus.exponent();
  const Index p = modulus.prime();
  std::vector<std::vector<Index>> levels(static_cast<std::size_t>(m + 1));
  // Leaves first, then fold each level into its parent: a parent's weight is
  // the sum of its p children a + j p^(k-1).
  auto& leaves = levels[static_cast<std::size_t>(m)];
  leaves.assign(static_cast<std::size_t>(modulus.size()), 0);
  for (Index i : set) leaves[static_cast<std::size_t>(i)] = 1;
  for (int k = m; k >= 1; --k) {
    const Index width = modulus.power(k - 1);
    const auto& child = levels[static_cast<std::size_t>(k)];
    auto& parent = levels[static_cast<std::size_t>(k - 1)];
    parent.assign(static_cast<std::size_t>(width), 0);
    for (Index a = 0; a < width; ++a) {
      Index sum = 0;
      for (Index j = 0; j < p; ++j) sum += child[static_cast<std::size_t>(a + j * width)];
      parent[static_cast<std::size_t>(a)] = sum;
    }
  }
  return LevelTable(modulus, std::move(levels));
}

ResidueHistogram chi_star(Index d, const PrimePowerModulus& modulus) {
  if (d < 0 || d > modulus.size()) {
    throw std::invalid_argument("cardinality " + std::to_string(d) + " outside [0, " +
                                std::to_string(modulus.size()) + "]");
  }
  const int m = modulus.exponent();
  std::vector<std::vector<Index>> levels(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) {
    const Index width = modulus.power(k);
    auto& level = levels[static_cast<std::size_t>(k)];
    level.resize(static_cast<std::size_t>(width));
    for (Index a = 0; a < width; ++a) {
      // floor((d - 1 - a) / p^k + 1) clamped at zero; a < p^k keeps the
      // numerator >= -p^k so the shifted division below is exact flooring.
      const Index num = d - 1 - a + width;
      level[static_cast<std::size_t>(a)] = num <= 0 ? 0 : num / width;
    }
  }
  return LevelTable(modulus, std::move(levels));
}

Index digit_reverse(Index a, Index p, int m) {
  if (p < 2 || m < 0) throw std::invalid_argument("digit_reverse needs p >= 2 and m >= 0");
  Index bound = 1;
  for (int i = 0; i < m; ++i) bound *= p;
  if (a < 0 || a >= bound) {
    throw std::invalid_argument("value " + std::to_string(a) + " outside [0, p^m - 1]");
  }
  Index out = 0;
  for (int i = 0; i < m; ++i) {
    out = out * p + a % p;
    a /= p;
  }
  return out;
}

IndexSet digit_reverse(const IndexSet& set, const PrimePowerModulus& modulus) {
  require_same_modulus(set, modulus);
  std::vector<Index> out;
  out.reserve(set.size());
  for (Index i : set) out.push_back(digit_reverse(i, modulus.prime(), modulus.exponent()));
  return IndexSet(set.n(), std::move(out));
}

DispersionTable dispersion(const IndexSet& set, const PrimePowerModulus& modulus) {
  require_same_modulus(set, modulus);
  const int m = modulus.exponent();
  std::vector<std::vector<Index>> levels(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) {
    const Index block = modulus.power(m - k);
    auto& level = levels[static_cast<std::size_t>(k)];
    level.assign(static_cast<std::size_t>(modulus.power(k)), 0);
    for (Index j : set) ++level[static_cast<std::size_t>(j / block)];
  }
  return LevelTable(modulus, std::move(levels));
}

}  // namespace unisample
