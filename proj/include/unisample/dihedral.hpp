#pragma once

#include <cstdint>
#include <vector>

#include "unisample/bigint.hpp"
#include "unisample/index_set.hpp"

namespace unisample {

/// Dihedral action on Z_N: optional reflection n -> -n, then t steps of
/// the shift n -> n - 1.
IndexSet act(const IndexSet& set, Index t, bool reflect);

struct BraceletClass {
  IndexSet canonical;  ///< lexicographic minimum over the 2N images
  Index orbit_size = 0;
};

BraceletClass bracelet_canonical(const IndexSet& set);

/// Number of black/white bracelets of length n with d black beads, by
/// Burnside's lemma over the dihedral group of order 2n.
BigInt bracelet_count(Index n, Index d);

/// One canonical representative per bracelet of d-subsets of Z_n, in
/// lexicographic order. Throws BudgetExceeded when C(n, d) > budget.
std::vector<IndexSet> bracelet_representatives(Index n, Index d, std::uint64_t budget);

}  // namespace unisample
