#include "unisample/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "unisample/errors.hpp"

namespace unisample {

namespace {

void apply_into(std::span<const Index> in, Index n, Index t, bool reflect, std::vector<Index>& out) {
  out.resize(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    Index x = reflect ? (n - in[i]) % n : in[i];
    out[i] = ((x - t) % n + n) % n;
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

IndexSet act(const IndexSet& set, Index t, bool reflect) {
  std::vector<Index> out;
  apply_into(set.elements(), set.n(), t, reflect, out);
  return IndexSet(set.n(), std::move(out));
}

BraceletClass bracelet_canonical(const IndexSet& set) {
  const Index n = set.n();
  if (set.is_empty()) return {set, 1};
  std::vector<std::vector<Index>> images;
  images.reserve(static_cast<std::size_t>(2 * n));
  std::vector<Index> buf;
  for (int r = 0; r < 2; ++r) {
    for (Index t = 0; t < n; ++t) {
      apply_into(set.elements(), n, t, r == 1, buf);
      images.push_back(buf);
    }
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return {IndexSet(n, images.front()), static_cast<Index>(images.size())};
}

BigInt bracelet_count(Index n, Index d) {
  if (n < 1 || d < 0 || d > n) {
    throw std::invalid_argument("bracelet_count needs 0 <= d <= n and n >= 1");
  }
  // Rotations: sum over k | gcd(n, d) of phi(k) C(n/k, d/k).
  const Index g = std::gcd(n, d);  // gcd(n, 0) = n
  BigInt rotations = 0;
  for (Index k = 1; k <= g; ++k) {
    if (g % k == 0) rotations += BigInt(euler_phi(k)) * big_binomial(n / k, d / k);
  }
  // Reflections: n of them in total; the average number of fixed colourings
  // depends on the parities of n and d.
  BigInt reflection_term;
  if (n % 2 == 1) {
    reflection_term = big_binomial((n - 1) / 2, d / 2);
  } else if (d % 2 == 0) {
    reflection_term = big_binomial(n / 2, d / 2);
  } else {
    reflection_term = big_binomial(n / 2 - 1, (d - 1) / 2);
  }
  const BigInt total = BigInt(n) * reflection_term + rotations;
  if (total % (2 * n) != 0) {
    throw std::logic_error("Burnside sum not divisible by the group order");
  }
  return total / (2 * n);
}

std::vector<IndexSet> bracelet_representatives(Index n, Index d, std::uint64_t budget) {
  const std::uint64_t total = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
  if (total > budget) throw BudgetExceeded(total, budget);
  std::vector<IndexSet> reps;
  std::vector<Index> buf;
  for_each_combination(n, d, [&](std::span<const Index> c) {
    // c is canonical iff no image is lexicographically smaller.
    for (int r = 0; r < 2; ++r) {
      for (Index t = 0; t < n; ++t) {
        apply_into(c, n, t, r == 1, buf);
        if (std::lexicographical_compare(buf.begin(), buf.end(), c.begin(), c.end())) return true;
      }
    }
    reps.emplace_back(n, std::vector<Index>(c.begin(), c.end()));
    return true;
  });
  return reps;
}

}  // namespace unisample
