#include "unisample/index_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace unisample {

IndexSet::IndexSet(Index n, std::vector<Index> elements) : n_(n), elements_(std::move(elements)) {
  if (n < 1 || n > kMaxModulus) {
    throw std::invalid_argument("index set modulus must be in [1, 2^40], got " + std::to_string(n));
  }
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Index e = elements_[i];
    if (e < 0 || e >= n) {
      throw std::invalid_argument("index " + std::to_string(e) + " outside [0, " +
                                  std::to_string(n - 1) + "]");
    }
    if (i > 0 && elements_[i - 1] == e) {
      throw std::invalid_argument("duplicate index " + std::to_string(e));
    }
  }
}

IndexSet IndexSet::empty(Index n) { return IndexSet(n, {}); }

IndexSet IndexSet::full(Index n) { return interval(n, 0, n); }

IndexSet IndexSet::interval(Index n, Index first, Index count) {
  if (count < 0 || count > n) {
    throw std::invalid_argument("interval length " + std::to_string(count) + " outside [0, n]");
  }
  std::vector<Index> e(static_cast<std::size_t>(count));
  const Index start = ((first % n) + n) % n;
  for (Index i = 0; i < count; ++i) e[static_cast<std::size_t>(i)] = (start + i) % n;
  return IndexSet(n, std::move(e));
}

IndexSet IndexSet::from_mask(Index n, const std::vector<bool>& mask) {
  if (static_cast<Index>(mask.size()) != n) {
    throw std::invalid_argument("mask length does not match modulus");
  }
  IndexSet s;
  s.n_ = n;
  for (Index i = 0; i < n; ++i) {
    if (mask[static_cast<std::size_t>(i)]) s.elements_.push_back(i);
  }
  return s;
}

IndexSet IndexSet::from_bits(Index n, std::uint64_t bits) {
  if (n < 1 || n > 64) throw std::invalid_argument("from_bits requires 1 <= n <= 64");
  IndexSet s;
  s.n_ = n;
  for (Index i = 0; i < n; ++i) {
    if ((bits >> i) & 1U) s.elements_.push_back(i);
  }
  return s;
}

bool IndexSet::contains(Index i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::vector<bool> IndexSet::mask() const {
  std::vector<bool> m(static_cast<std::size_t>(n_), false);
  for (Index e : elements_) m[static_cast<std::size_t>(e)] = true;
  return m;
}

IndexSet IndexSet::complement() const {
  IndexSet s;
  s.n_ = n_;
  s.elements_.reserve(static_cast<std::size_t>(n_) - elements_.size());
  std::size_t j = 0;
  for (Index i = 0; i < n_; ++i) {
    if (j < elements_.size() && elements_[j] == i) {
      ++j;
    } else {
      s.elements_.push_back(i);
    }
  }
  return s;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return n_ == other.n_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("union of index sets with different moduli");
  IndexSet s;
  s.n_ = n_;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(s.elements_));
  return s;
}

IndexSet IndexSet::set_difference(const IndexSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("difference of index sets with different moduli");
  IndexSet s;
  s.n_ = n_;
  std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                      other.elements_.end(), std::back_inserter(s.elements_));
  return s;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements_[i]);
  }
  return out + "} mod " + std::to_string(n_);
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                      b.elements_.begin(), b.elements_.end());
      c != 0) {
    return c;
  }
  return a.n_ <=> b.n_;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; saturate instead of wrapping.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t rr = r / g;
    const std::uint64_t num2 = num / (i / g);
    if (rr != 0 && num2 > kMax / rr) return kMax;
    r = rr * num2;
  }
  return r;
}

bool for_each_combination(Index n, Index d,
                          const std::function<bool(std::span<const Index>)>& visit) {
  if (d < 0 || d > n) return true;
  std::vector<Index> c(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(c)) return false;
    Index i = d - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) return true;
    ++c[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < d; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace unisample
