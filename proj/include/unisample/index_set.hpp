#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "unisample/modulus.hpp"

namespace unisample {

/// A set of distinct residues in [0, n-1], stored sorted.
///
/// This is the common currency of the library: sampling sets, frequency
/// supports and zero sets are all IndexSets.
class IndexSet {
 public:
  IndexSet() = default;

  /// Elements may arrive in any order; duplicates and out-of-range values
  /// throw std::invalid_argument.
  IndexSet(Index n, std::vector<Index> elements);

  static IndexSet empty(Index n);
  static IndexSet full(Index n);
  /// [first, first + count - 1], reduced mod n.
  static IndexSet interval(Index n, Index first, Index count);
  static IndexSet from_mask(Index n, const std::vector<bool>& mask);
  /// Bit i of `bits` set <=> i in the set; requires n <= 64.
  static IndexSet from_bits(Index n, std::uint64_t bits);

  Index n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_empty() const noexcept { return elements_.empty(); }
  std::span<const Index> elements() const noexcept { return elements_; }
  Index operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(Index i) const;
  IndexSet complement() const;
  std::vector<bool> mask() const;
  bool is_subset_of(const IndexSet& other) const;

  IndexSet set_union(const IndexSet& other) const;
  IndexSet set_difference(const IndexSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  /// Lexicographic on the sorted element list (then on n).
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  Index n_ = 0;
  std::vector<Index> elements_;
};

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

/// Visits every d-subset of [0, n-1] in lexicographic order. The callback
/// receives the sorted elements and returns false to stop early. Returns
/// false iff stopped early.
bool for_each_combination(Index n, Index d,
                          const std::function<bool(std::span<const Index>)>& visit);

}  // namespace unisample
