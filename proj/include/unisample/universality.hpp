#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "unisample/index_set.hpp"
#include "unisample/modulus.hpp"
#include "unisample/residue.hpp"

namespace unisample {

/// A level k and residues a, b with chi_k(b) - chi_k(a) >= 2.
struct UniversalityWitness {
  int level = 0;
  Index a = 0;
  Index b = 0;

  friend bool operator==(const UniversalityWitness&, const UniversalityWitness&) = default;
};

struct UniversalityVerdict {
  bool universal = true;
  std::optional<UniversalityWitness> witness;  ///< present iff !universal

  explicit operator bool() const noexcept { return universal; }
};

/// Thrown by operations that need a universal input.
class NotUniversal : public std::runtime_error {
 public:
  explicit NotUniversal(UniversalityVerdict verdict);
  const UniversalityVerdict& verdict() const noexcept { return verdict_; }

 private:
  UniversalityVerdict verdict_;
};

/// Balanced congruence classes at every level: max_a chi_k(a) - min_a chi_k(a) <= 1.
///
/// On failure the witness is the first (k, a, b) in ascending scan order with
/// chi_k(b) - chi_k(a) >= 2.
UniversalityVerdict is_universal(const IndexSet& set, const PrimePowerModulus& modulus);
UniversalityVerdict is_universal(const ResidueHistogram& histogram);

/// Level multisets of the set equal those of [0, d-1].
bool is_universal_via_chi_star(const IndexSet& set, const PrimePowerModulus& modulus);

/// The digit-reversed image is uniformly dispersed over the p-adic blocks.
bool is_universal_via_dispersion(const IndexSet& set, const PrimePowerModulus& modulus);

/// p-adic valuations of A = prod (m_j - m_i) and B = prod (j - i).
struct SchurValuation {
  Index numerator = 0;
  Index denominator = 0;
  bool coprime = false;  ///< numerator == denominator, i.e. p does not divide A / B
};

/// Valuation of prod_{i<j} (m_j - m_i) read off the histogram; the integers
/// themselves are never formed.
Index difference_product_valuation(const ResidueHistogram& histogram);

/// Sufficient (not necessary) universality test. Throws on an empty set.
SchurValuation schur_valuation(const IndexSet& set, const PrimePowerModulus& modulus);

struct ElementaryPiece {
  int level = 0;     ///< k: the piece has exactly one element in every class mod p^k
  IndexSet elements;
};

struct UniversalDecomposition {
  std::vector<ElementaryPiece> pieces;

  std::vector<int> levels() const;
  Index size() const;
  IndexSet united(Index n) const;
};

/// Result of the greedy elementary-piece construction.
struct UniversalSubset {
  IndexSet example;
  UniversalDecomposition decomposition;

  Index size() const { return static_cast<Index>(example.size()); }
};

/// Largest k such that no class mod p^k is empty (0 for the empty set too).
int largest_full_level(const ResidueHistogram& histogram);

/// Powers of p in the base-p expansion of d with repetitions, nonincreasing.
std::vector<int> base_p_levels(Index d, Index p);

/// A largest universal subset, built greedily: pick the deepest level with no
/// empty class, take the smallest remaining element of each class, discard
/// the classes mod p^(k+1) that were used, repeat.
UniversalSubset maximal_universal(const IndexSet& set, const PrimePowerModulus& modulus);

/// A universal subset of exactly d elements, driven by the base-p digits of d.
/// Throws Infeasible (naming the maximal size) when d exceeds it.
UniversalSubset universal_subset_of_size(const IndexSet& set, const PrimePowerModulus& modulus,
                                         Index d);

struct MinimalUniversal {
  Index size = 0;
  IndexSet example;  ///< universal superset of the input
};

/// Smallest universal superset, via the complement of a maximal universal
/// subset of the complement.
MinimalUniversal minimal_universal(const IndexSet& set, const PrimePowerModulus& modulus);

/// Splits a universal set into elementary pieces. Throws NotUniversal.
UniversalDecomposition decompose(const IndexSet& set, const PrimePowerModulus& modulus);

}  // namespace unisample
