#include "unisample/fourier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <Eigen/SVD>

#include "unisample/dihedral.hpp"

namespace unisample {

namespace {

Complex unit(Index k, Index n, double sign) {
  const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  if (m.rows() == m.cols()) {
    return Eigen::JacobiSVD<ComplexMatrix, Eigen::NoQRPreconditioner>(m).singularValues();
  }
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

ComplexMatrix submatrix(const IndexSet& rows, const IndexSet& cols, const std::vector<Complex>& tw) {
  const Index n = static_cast<Index>(tw.size());
  ComplexMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          tw[static_cast<std::size_t>((rows[a] * cols[b]) % n)];
    }
  }
  return out;
}

bool square_full_rank(const ComplexMatrix& m, double tolerance) {
  if (m.rows() == 0) return true;
  const auto sv = singular_values(m);
  return sv(sv.size() - 1) > tolerance * static_cast<double>(m.rows()) * sv(0);
}

bool all_invertible(const IndexSet& set, std::span<const IndexSet> column_sets, double tolerance,
                    unsigned threads) {
  const auto tw = twiddles(set.n());
  threads = std::max(1U, threads);
  std::atomic<bool> ok{true};
  auto work = [&](unsigned t) {
    for (std::size_t c = t; c < column_sets.size() && ok.load(std::memory_order_relaxed); c += threads) {
      if (!square_full_rank(submatrix(set, column_sets[c], tw), tolerance)) ok = false;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return ok;
}

Eigen::Index to_eigen(std::size_t i) { return static_cast<Eigen::Index>(i); }

ComplexMatrix select_rows(const ComplexMatrix& m, const IndexSet& rows) {
  ComplexMatrix out(to_eigen(rows.size()), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) out.row(to_eigen(k)) = m.row(rows[k]);
  return out;
}

}  // namespace

Signal::Signal(Index n, std::vector<Complex> values) : n_(n), values_(std::move(values)) {
  if (n < 1) throw std::invalid_argument("signal length must be positive");
  if (static_cast<Index>(values_.size()) != n) {
    throw std::invalid_argument("signal has " + std::to_string(values_.size()) +
                                " values, expected " + std::to_string(n));
  }
}

Signal Signal::zeros(Index n) { return Signal(n, std::vector<Complex>(static_cast<std::size_t>(n))); }

double Signal::max_abs() const {
  double m = 0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<Complex> twiddles(Index n) {
  std::vector<Complex> tw(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) tw[static_cast<std::size_t>(k)] = unit(k, n, -1.0);
  return tw;
}

Signal dft(const Signal& f) {
  const Index n = f.n();
  const auto tw = twiddles(n);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Index m = 0; m < n; ++m) {
    Complex acc = 0;
    for (Index k = 0; k < n; ++k) acc += f[k] * tw[static_cast<std::size_t>((m * k) % n)];
    out[static_cast<std::size_t>(m)] = acc;
  }
  return Signal(n, std::move(out));
}

Signal inverse_dft(const Signal& g) {
  const Index n = g.n();
  const auto tw = twiddles(n);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Index m = 0; m < n; ++m) {
    Complex acc = 0;
    for (Index k = 0; k < n; ++k) acc += g[k] * std::conj(tw[static_cast<std::size_t>((m * k) % n)]);
    out[static_cast<std::size_t>(m)] = acc / static_cast<double>(n);
  }
  return Signal(n, std::move(out));
}

DftSubmatrix dft_submatrix(const IndexSet& rows, const IndexSet& cols, Index n) {
  if (rows.n() != n || cols.n() != n) {
    throw std::invalid_argument("row and column sets must both live in Z_" + std::to_string(n));
  }
  return {rows, cols, n, submatrix(rows, cols, twiddles(n))};
}

double RankReport::condition_number() const {
  if (!full_rank || smallest_singular_value == 0) return std::numeric_limits<double>::infinity();
  return largest_singular_value / smallest_singular_value;
}

RankReport rank_report(const ComplexMatrix& matrix, double tolerance) {
  RankReport r;
  r.tolerance = tolerance;
  const Eigen::Index dim = std::min(matrix.rows(), matrix.cols());
  if (dim == 0) {
    r.full_rank = true;
    return r;
  }
  const auto sv = singular_values(matrix);
  r.largest_singular_value = sv(0);
  r.smallest_singular_value = sv(dim - 1);
  const double cutoff = tolerance * static_cast<double>(dim) * sv(0);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (sv(k) > cutoff) ++r.numerical_rank;
  }
  r.full_rank = r.numerical_rank == dim;
  return r;
}

RankReport is_invertible(const IndexSet& rows, const IndexSet& cols, Index n, double tolerance) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("invertibility needs a square submatrix, got " +
                                std::to_string(rows.size()) + " x " + std::to_string(cols.size()));
  }
  return rank_report(dft_submatrix(rows, cols, n).entries, tolerance);
}

bool brute_force_universal(const IndexSet& set, double tolerance, std::uint64_t budget,
                           unsigned threads) {
  const auto reps = bracelet_representatives(set.n(), static_cast<Index>(set.size()), budget);
  return all_invertible(set, reps, tolerance, threads);
}

bool brute_force_universal(const IndexSet& set, std::span<const IndexSet> column_sets,
                           double tolerance) {
  for (const auto& cols : column_sets) {
    if (cols.n() != set.n() || cols.size() != set.size()) {
      throw std::invalid_argument("column set does not match the row set's size or modulus");
    }
  }
  return all_invertible(set, column_sets, tolerance, 1);
}

ComplexMatrix bandlimited_basis(const IndexSet& support) {
  const Index n = support.n();
  ComplexMatrix r(n, to_eigen(support.size()));
  for (Index m = 0; m < n; ++m) {
    for (std::size_t b = 0; b < support.size(); ++b) {
      r(m, to_eigen(b)) = unit((m * support[b]) % n, n, 1.0);
    }
  }
  return r;
}

Reconstruction interpolate(std::span<const Complex> samples, const IndexSet& sample_set,
                           const IndexSet& support, double tolerance) {
  if (sample_set.n() != support.n()) throw std::invalid_argument("sample set and support differ in n");
  if (sample_set.size() != support.size()) {
    throw std::invalid_argument("need as many samples as support frequencies");
  }
  if (samples.size() != sample_set.size()) {
    throw std::invalid_argument("got " + std::to_string(samples.size()) + " sample values for " +
                                std::to_string(sample_set.size()) + " sample positions");
  }
  const ComplexMatrix r = bandlimited_basis(support);
  const ComplexMatrix a = select_rows(r, sample_set);
  Reconstruction out;
  out.rank = rank_report(a, tolerance);
  if (!out.rank.full_rank) {
    throw SingularSystem("sampling matrix is singular (numerical rank " +
                             std::to_string(out.rank.numerical_rank) + " of " +
                             std::to_string(sample_set.size()) + ")",
                         out.rank);
  }
  Eigen::VectorXcd b(to_eigen(samples.size()));
  for (std::size_t k = 0; k < samples.size(); ++k) b(to_eigen(k)) = samples[k];
  const Eigen::FullPivLU<ComplexMatrix> lu(a);
  Eigen::VectorXcd c = lu.solve(b);
  c += lu.solve(b - a * c);
  const Eigen::VectorXcd f = r * c;
  out.signal = Signal(support.n(), std::vector<Complex>(f.data(), f.data() + f.size()));
  out.ill_conditioned = out.rank.condition_number() > kIllConditionedThreshold;
  return out;
}

ComplexMatrix interpolating_basis(const ComplexMatrix& basis, const IndexSet& sample_set,
                                  double tolerance) {
  if (sample_set.n() != basis.rows() || to_eigen(sample_set.size()) != basis.cols()) {
    throw std::invalid_argument("sample set must pick one row per basis column");
  }
  const ComplexMatrix a = select_rows(basis, sample_set);
  const auto rank = rank_report(a, tolerance);
  if (!rank.full_rank) throw SingularSystem("basis restricted to the sample set is singular", rank);
  // U = R A^{-1}, i.e. U^T = A^{-T} R^T.
  const Eigen::FullPivLU<ComplexMatrix> lu(a.transpose());
  ComplexMatrix ut = lu.solve(basis.transpose());
  ut += lu.solve(basis.transpose() - a.transpose() * ut);
  return ut.transpose();
}

IndexSet find_sampling_set(const ComplexMatrix& basis, double tolerance) {
  const auto rank = rank_report(basis, tolerance);
  if (!rank.full_rank || basis.cols() > basis.rows()) {
    throw std::invalid_argument("basis has numerical rank " + std::to_string(rank.numerical_rank) +
                                ", expected " + std::to_string(basis.cols()));
  }
  const Eigen::ColPivHouseholderQR<ComplexMatrix> qr(basis.transpose());
  const auto& perm = qr.colsPermutation().indices();
  std::vector<Index> rows;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) rows.push_back(perm(k));
  return IndexSet(basis.rows(), std::move(rows));
}

double condition_lower_bound(const IndexSet& support) {
  const Index n = support.n();
  const std::size_t d = support.size();
  if (d <= 1) return 1.0;
  // log of prod over ordered pairs, i.e. twice the unordered sum.
  double log_product = 0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const double s = std::abs(2.0 * std::sin(std::numbers::pi * static_cast<double>(support[b] - support[a]) /
                                               static_cast<double>(n)));
      log_product += 2.0 * std::log(s);
    }
  }
  return std::sqrt(static_cast<double>(d)) * std::exp(-log_product / (2.0 * static_cast<double>(d)));
}

ConditionReport condition_report(const IndexSet& sample_set, const IndexSet& support) {
  const Index d = static_cast<Index>(support.size());
  if (sample_set != IndexSet::interval(support.n(), 0, d)) {
    throw std::invalid_argument("the condition bound applies to the sample block [0, d-1] only");
  }
  ConditionReport out;
  out.rank = is_invertible(sample_set, support, support.n());
  out.condition_number = out.rank.condition_number();
  out.lower_bound = condition_lower_bound(support);
  return out;
}

}  // namespace unisample
