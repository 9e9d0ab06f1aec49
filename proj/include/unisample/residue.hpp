#pragma once

#include <span>
#include <vector>

#include "unisample/index_set.hpp"
#include "unisample/modulus.hpp"

namespace unisample {

/// Per-level counts over the congruence tree of an index set.
///
/// Level k holds p^k entries. For a residue histogram the a-th entry of level
/// k is the number of elements congruent to a mod p^k; for a dispersion table
/// it is the number of elements in the a-th block of length p^(M-k). Both are
/// stored densely, level 0 first.
class LevelTable {
 public:
  LevelTable(PrimePowerModulus modulus, std::vector<std::vector<Index>> levels);

  const PrimePowerModulus& modulus() const noexcept { return modulus_; }
  int levels() const noexcept { return modulus_.exponent() + 1; }
  std::span<const Index> level(int k) const;
  Index at(int k, Index a) const;
  /// Total weight of level 0, i.e. the cardinality of the underlying set.
  Index cardinality() const { return levels_.front().front(); }

  /// Level k as a sorted multiset (the multiplicity multiset of the level).
  std::vector<Index> sorted_level(int k) const;

  friend bool operator==(const LevelTable&, const LevelTable&) = default;

 private:
  PrimePowerModulus modulus_;
  std::vector<std::vector<Index>> levels_;
};

using ResidueHistogram = LevelTable;
using DispersionTable = LevelTable;

ResidueHistogram residue_histogram(const IndexSet& set, const PrimePowerModulus& modulus);

/// Histogram of [0, d-1], from the closed form floor((d-1-a)/p^k + 1).
ResidueHistogram chi_star(Index d, const PrimePowerModulus& modulus);

/// Reverses the m base-p digits of a.
Index digit_reverse(Index a, Index p, int m);

/// Image of every element of `set` under the M-digit reversal.
IndexSet digit_reverse(const IndexSet& set, const PrimePowerModulus& modulus);

/// Block occupancy: level k counts the elements in [a p^(M-k), (a+1) p^(M-k) - 1].
DispersionTable dispersion(const IndexSet& set, const PrimePowerModulus& modulus);

}  // namespace unisample
