#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "unisample/errors.hpp"
#include "unisample/index_set.hpp"

namespace unisample {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultRankTolerance = 1e-10;
/// Condition numbers above this flag a reconstruction as unreliable.
inline constexpr double kIllConditionedThreshold = 1e8;

/// A length-n complex signal on Z_n.
class Signal {
 public:
  Signal() = default;
  Signal(Index n, std::vector<Complex> values);
  static Signal zeros(Index n);

  Index n() const noexcept { return n_; }
  std::span<const Complex> values() const noexcept { return values_; }
  const Complex& operator[](Index i) const { return values_[static_cast<std::size_t>(i)]; }
  Complex& operator[](Index i) { return values_[static_cast<std::size_t>(i)]; }
  double max_abs() const;

 private:
  Index n_ = 0;
  std::vector<Complex> values_;
};

/// zeta^k for zeta = exp(-2 pi i / n), each entry from the exact angle.
std::vector<Complex> twiddles(Index n);

/// (Ff)(m) = sum_k f(k) zeta^(mk).
Signal dft(const Signal& f);
/// F^{-1} g = (1/n) F^* g.
Signal inverse_dft(const Signal& g);

struct DftSubmatrix {
  IndexSet rows;
  IndexSet cols;
  Index n = 0;
  ComplexMatrix entries;  ///< entry (a, b) = zeta^(rows[a] cols[b])
};

DftSubmatrix dft_submatrix(const IndexSet& rows, const IndexSet& cols, Index n);

struct RankReport {
  Index numerical_rank = 0;
  double smallest_singular_value = 0;
  double largest_singular_value = 0;
  double tolerance = kDefaultRankTolerance;

  /// Rank equals the smaller dimension.
  bool full_rank = false;
  double condition_number() const;
};

/// Singular values are counted as nonzero when they exceed
/// tolerance * min(rows, cols) * sigma_max.
RankReport rank_report(const ComplexMatrix& matrix, double tolerance = kDefaultRankTolerance);

/// Throws std::invalid_argument unless |rows| = |cols|.
RankReport is_invertible(const IndexSet& rows, const IndexSet& cols, Index n,
                         double tolerance = kDefaultRankTolerance);

/// Raised when a square system needed for interpolation is singular.
class SingularSystem : public std::runtime_error {
 public:
  SingularSystem(const std::string& what, RankReport report)
      : std::runtime_error(what), report_(report) {}
  const RankReport& report() const noexcept { return report_; }

 private:
  RankReport report_;
};

/// Every |set| x |set| submatrix with rows `set` is invertible. Enumerates
/// one column set per bracelet class, since translating or reflecting the
/// columns leaves the singular values unchanged. Throws BudgetExceeded when
/// C(n, |set|) > budget.
bool brute_force_universal(const IndexSet& set, double tolerance = kDefaultRankTolerance,
                           std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

/// Same test against an explicit list of column sets.
bool brute_force_universal(const IndexSet& set, std::span<const IndexSet> column_sets,
                           double tolerance = kDefaultRankTolerance);

/// Columns span B^J: column j is exp(+2 pi i m j / n) for m in [0, n-1].
ComplexMatrix bandlimited_basis(const IndexSet& support);

struct Reconstruction {
  Signal signal;
  RankReport rank;
  bool ill_conditioned = false;
};

/// The unique f in B^support with f(i) = samples[k] for the k-th element i
/// of sample_set. Throws SingularSystem when the system is singular.
Reconstruction interpolate(std::span<const Complex> samples, const IndexSet& sample_set,
                           const IndexSet& support, double tolerance = kDefaultRankTolerance);

/// U = R (E_I^T R)^{-1}; column k is 1 at sample_set[k] and 0 at the other
/// sample positions.
ComplexMatrix interpolating_basis(const ComplexMatrix& basis, const IndexSet& sample_set,
                                  double tolerance = kDefaultRankTolerance);

/// d rows of an n x d basis forming an invertible submatrix, chosen by
/// column-pivoted QR of the transpose. Throws std::invalid_argument on a
/// rank-deficient basis.
IndexSet find_sampling_set(const ComplexMatrix& basis, double tolerance = kDefaultRankTolerance);

struct ConditionReport {
  double condition_number = 0;  ///< +inf when singular
  double lower_bound = 0;
  RankReport rank;
};

/// Condition number of the DFT submatrix on rows [0, d-1] and the given
/// columns, together with the product-of-sines lower bound
/// sqrt(d) * (prod_{j1 != j2} |2 sin(pi (j1 - j2) / n)|)^(-1/(2d)).
ConditionReport condition_report(const IndexSet& sample_set, const IndexSet& support);

double condition_lower_bound(const IndexSet& support);

}  // namespace unisample
