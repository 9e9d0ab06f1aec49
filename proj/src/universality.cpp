#include "unisample/universality.hpp"

#include <algorithm>
#include <string>

#include "unisample/errors.hpp"

namespace unisample {

namespace {

std::string describe(const UniversalityVerdict& v) {
  if (v.universal || !v.witness) return "index set is universal";
  const auto& w = *v.witness;
  return "index set is not universal: classes " + std::to_string(w.a) + " and " +
         std::to_string(w.b) + " mod p^" + std::to_string(w.level) + " differ by at least 2";
}

Index pairs(Index c) { return c * (c - 1) / 2; }

// Greedy construction over a working mask. With `prescribed` empty the level
// of each piece is the deepest full level of what remains (maximal subset);
// otherwise the given levels are used in order.
UniversalDecomposition greedy_pieces(const IndexSet& set, const PrimePowerModulus& modulus,
                                     const std::vector<int>* prescribed) {
  const Index n = modulus.size();
  const int m = modulus.exponent();
  std::vector<char> remaining(static_cast<std::size_t>(n), 0);
  for (Index i : set) remaining[static_cast<std::size_t>(i)] = 1;
  Index remaining_count = static_cast<Index>(set.size());

  UniversalDecomposition out;
  for (std::size_t r = 0;; ++r) {
    if (prescribed ? r == prescribed->size() : remaining_count == 0) break;

    int k;
    if (prescribed) {
      k = (*prescribed)[r];
    } else {
      std::vector<Index> current;
      current.reserve(static_cast<std::size_t>(remaining_count));
      for (Index i = 0; i < n; ++i) {
        if (remaining[static_cast<std::size_t>(i)]) current.push_back(i);
      }
      k = largest_full_level(residue_histogram(IndexSet(n, std::move(current)), modulus));
    }

    const Index width = modulus.power(k);
    std::vector<Index> chosen(static_cast<std::size_t>(width), -1);
    Index filled = 0;
    for (Index i = 0; i < n && filled < width; ++i) {
      if (!remaining[static_cast<std::size_t>(i)]) continue;
      auto& slot = chosen[static_cast<std::size_t>(i % width)];
      if (slot < 0) {
        slot = i;
        ++filled;
      }
    }
    if (filled < width) {
      throw Infeasible("no element left in some class mod p^" + std::to_string(k) +
                       " while building piece " + std::to_string(r + 1));
    }

    // Discard every remaining element sharing a class mod p^(k+1) with a chosen one.
    if (k == m) {
      std::fill(remaining.begin(), remaining.end(), 0);
      remaining_count = 0;
    } else {
      const Index outer = modulus.power(k + 1);
      std::vector<char> used(static_cast<std::size_t>(outer), 0);
      for (Index c : chosen) used[static_cast<std::size_t>(c % outer)] = 1;
      for (Index i = 0; i < n; ++i) {
        auto& slot = remaining[static_cast<std::size_t>(i)];
        if (slot && used[static_cast<std::size_t>(i % outer)]) {
          slot = 0;
          --remaining_count;
        }
      }
    }
    out.pieces.push_back({k, IndexSet(n, std::move(chosen))});
  }
  return out;
}

UniversalSubset as_subset(UniversalDecomposition d, Index n) {
  IndexSet united = d.united(n);
  return {std::move(united), std::move(d)};
}

}  // namespace

NotUniversal::NotUniversal(UniversalityVerdict verdict)
    : std::runtime_error(describe(verdict)), verdict_(std::move(verdict)) {}

UniversalityVerdict is_universal(const ResidueHistogram& histogram) {
  for (int k = 0; k < histogram.levels(); ++k) {
    auto level = histogram.level(k);
    const auto [lo, hi] = std::minmax_element(level.begin(), level.end());
    if (*hi - *lo <= 1) continue;
    // First a that has some b with chi(b) >= chi(a) + 2, then the first such b.
    const Index top = *hi;
    const auto a_it = std::find_if(level.begin(), level.end(), [&](Index c) { return c <= top - 2; });
    const Index need = *a_it + 2;
    const auto b_it = std::find_if(level.begin(), level.end(), [&](Index c) { return c >= need; });
    return {false, UniversalityWitness{k, a_it - level.begin(), b_it - level.begin()}};
  }
  return {true, std::nullopt};
}

UniversalityVerdict is_universal(const IndexSet& set, const PrimePowerModulus& modulus) {
  return is_universal(residue_histogram(set, modulus));
}

bool is_universal_via_chi_star(const IndexSet& set, const PrimePowerModulus& modulus) {
  const auto hist = residue_histogram(set, modulus);
  const auto model = chi_star(static_cast<Index>(set.size()), modulus);
  for (int k = 0; k < hist.levels(); ++k) {
    if (hist.sorted_level(k) != model.sorted_level(k)) return false;
  }
  return true;
}

bool is_universal_via_dispersion(const IndexSet& set, const PrimePowerModulus& modulus) {
  const auto table = dispersion(digit_reverse(set, modulus), modulus);
  for (int k = 1; k < table.levels(); ++k) {
    auto level = table.level(k);
    const auto [lo, hi] = std::minmax_element(level.begin(), level.end());
    if (*hi - *lo > 1) return false;
  }
  return true;
}

Index difference_product_valuation(const ResidueHistogram& histogram) {
  // Pairs sharing a class mod p^k have p^k | (m_j - m_i); those with exactly
  // p^k are the level-k pairs minus the level-(k+1) pairs.
  const int m = histogram.modulus().exponent();
  std::vector<Index> same_class(static_cast<std::size_t>(m + 2), 0);
  for (int k = 0; k <= m; ++k) {
    for (Index c : histogram.level(k)) same_class[static_cast<std::size_t>(k)] += pairs(c);
  }
  Index v = 0;
  for (int k = 1; k <= m; ++k) {
    v += k * (same_class[static_cast<std::size_t>(k)] - same_class[static_cast<std::size_t>(k + 1)]);
  }
  return v;
}

SchurValuation schur_valuation(const IndexSet& set, const PrimePowerModulus& modulus) {
  if (set.is_empty()) throw std::invalid_argument("schur_valuation needs a nonempty set");
  SchurValuation out;
  out.numerator = difference_product_valuation(residue_histogram(set, modulus));
  out.denominator = difference_product_valuation(chi_star(static_cast<Index>(set.size()), modulus));
  out.coprime = out.numerator == out.denominator;
  return out;
}

std::vector<int> UniversalDecomposition::levels() const {
  std::vector<int> out;
  out.reserve(pieces.size());
  for (const auto& piece : pieces) out.push_back(piece.level);
  return out;
}

Index UniversalDecomposition::size() const {
  Index total = 0;
  for (const auto& piece : pieces) total += static_cast<Index>(piece.elements.size());
  return total;
}

IndexSet UniversalDecomposition::united(Index n) const {
  std::vector<Index> all;
  for (const auto& piece : pieces) all.insert(all.end(), piece.elements.begin(), piece.elements.end());
  return IndexSet(n, std::move(all));
}

int largest_full_level(const ResidueHistogram& histogram) {
  int best = 0;
  for (int k = 0; k < histogram.levels(); ++k) {
    auto l = histogram.level(k);
    if (std::find(l.begin(), l.end(), Index{0}) != l.end()) break;
    best = k;
  }
  return best;
}

std::vector<int> base_p_levels(Index d, Index p) {
  if (d < 0 || p < 2) throw std::invalid_argument("base_p_levels needs d >= 0 and p >= 2");
  std::vector<int> digits_by_power;
  for (Index rest = d; rest > 0; rest /= p) digits_by_power.push_back(static_cast<int>(rest % p));
  std::vector<int> out;
  for (int k = static_cast<int>(digits_by_power.size()) - 1; k >= 0; --k) {
    out.insert(out.end(), static_cast<std::size_t>(digits_by_power[static_cast<std::size_t>(k)]), k);
  }
  return out;
}

UniversalSubset maximal_universal(const IndexSet& set, const PrimePowerModulus& modulus) {
  (void)residue_histogram(set, modulus);  // validates the modulus
  return as_subset(greedy_pieces(set, modulus, nullptr), modulus.size());
}

UniversalSubset universal_subset_of_size(const IndexSet& set, const PrimePowerModulus& modulus,
                                         Index d) {
  if (d < 0) throw std::invalid_argument("target size must be nonnegative");
  const auto maximal = maximal_universal(set, modulus);
  if (d > maximal.size()) {
    throw Infeasible("no universal subset of size " + std::to_string(d) +
                     ": the largest universal subset has " + std::to_string(maximal.size()) +
                     " elements");
  }
  if (d == maximal.size()) return maximal;
  const auto levels = base_p_levels(d, modulus.prime());
  return as_subset(greedy_pieces(set, modulus, &levels), modulus.size());
}

MinimalUniversal minimal_universal(const IndexSet& set, const PrimePowerModulus& modulus) {
  (void)residue_histogram(set, modulus);
  const auto inner = maximal_universal(set.complement(), modulus);
  return {modulus.size() - inner.size(), inner.example.complement()};
}

UniversalDecomposition decompose(const IndexSet& set, const PrimePowerModulus& modulus) {
  auto verdict = is_universal(set, modulus);
  if (!verdict) throw NotUniversal(std::move(verdict));
  auto pieces = greedy_pieces(set, modulus, nullptr);
  if (pieces.size() != static_cast<Index>(set.size())) {
    throw std::logic_error("greedy decomposition of a universal set lost elements");
  }
  return pieces;
}

}  // namespace unisample
