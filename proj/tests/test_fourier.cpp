#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "unisample/dihedral.hpp"
#include "unisample/fourier.hpp"
#include "unisample/universality.hpp"

using namespace unisample;

namespace {

IndexSet random_subset_of_size(std::mt19937_64& gen, Index n, Index d) {
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  std::shuffle(all.begin(), all.end(), gen);
  all.resize(static_cast<std::size_t>(d));
  return IndexSet(n, all);
}

std::vector<Complex> gaussian(std::mt19937_64& gen, std::size_t count) {
  std::normal_distribution<double> g;
  std::vector<Complex> out(count);
  for (auto& z : out) z = {g(gen), g(gen)};
  return out;
}

/// f = F^{-1} g for g supported on `support` with the given coefficients.
Signal synthesize(const IndexSet& support, const std::vector<Complex>& coeffs) {
  auto g = Signal::zeros(support.n());
  for (std::size_t k = 0; k < support.size(); ++k) g[support[k]] = coeffs[k];
  return inverse_dft(g);
}

double relative_error(const Signal& a, const Signal& b) {
  double num = 0, den = 0;
  for (Index i = 0; i < a.n(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("signals and the dense DFT") {
  CHECK_THROWS_AS(Signal(4, {1.0, 2.0}), std::invalid_argument);
  auto delta = Signal::zeros(8);
  delta[0] = 1.0;
  const auto ones = dft(delta);
  for (const auto& v : ones.values()) CHECK(std::abs(v - Complex(1.0)) < 1e-14);

  std::mt19937_64 gen(1);
  for (Index n : {1, 5, 8, 12, 27}) {
    const auto values = gaussian(gen, static_cast<std::size_t>(n));
    const Signal f(n, values);
    const auto ff = dft(f);
    const auto ref = oracle::naive_dft(values);
    for (Index k = 0; k < n; ++k) CHECK(std::abs(ff[k] - ref[static_cast<std::size_t>(k)]) < 1e-11);
    CHECK(relative_error(inverse_dft(ff), f) < 1e-13);
  }
}

TEST_CASE("DFT submatrices") {
  const auto one = dft_submatrix(IndexSet(8, {0}), IndexSet(8, {5}), 8);
  CHECK(std::abs(one.entries(0, 0) - Complex(1.0)) < 1e-15);
  const auto minus = dft_submatrix(IndexSet(4, {1}), IndexSet(4, {2}), 4);
  CHECK(std::abs(minus.entries(0, 0) - Complex(-1.0)) < 1e-15);
  CHECK_THROWS_AS(dft_submatrix(IndexSet(4, {1}), IndexSet(5, {2}), 4), std::invalid_argument);

  const auto ex = dft_submatrix(IndexSet(12, {1, 5}), IndexSet(12, {3, 7}), 12);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(std::abs(std::abs(ex.entries(a, b)) - 1.0) < 1e-15);
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(ex.rows[static_cast<std::size_t>(a)] * ex.cols[static_cast<std::size_t>(b)]) / 12.0;
      CHECK(std::abs(ex.entries(a, b) - std::polar(1.0, angle)) < 1e-14);
    }
  }

  // (1/N) F* F = I.
  for (Index n : {1, 2, 3, 7, 8, 16, 64, 100, 256}) {
    const auto f = dft_submatrix(IndexSet::full(n), IndexSet::full(n), n).entries;
    const ComplexMatrix gram = f.adjoint() * f / static_cast<double>(n);
    CHECK((gram - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("numerical invertibility") {
  CHECK_FALSE(is_invertible(IndexSet(4, {0, 2}), IndexSet(4, {0, 2}), 4).full_rank);
  CHECK(is_invertible(IndexSet(4, {0, 2}), IndexSet(4, {0, 2}), 4).numerical_rank == 1);
  CHECK(is_invertible(IndexSet(9, {4}), IndexSet(9, {7}), 9).full_rank);
  CHECK_THROWS_AS(is_invertible(IndexSet(4, {0, 2}), IndexSet(4, {0}), 4), std::invalid_argument);

  const auto r = is_invertible(IndexSet::full(8), IndexSet::full(8), 8);
  CHECK(r.full_rank);
  CHECK(r.condition_number() == doctest::Approx(1.0));
  CHECK(r.tolerance == kDefaultRankTolerance);
}

TEST_CASE("invertibility is a bracelet invariant and symmetric in rows and columns") {
  std::mt19937_64 gen(2);
  for (Index n : {8, 9, 12, 16}) {
    for (int t = 0; t < 200; ++t) {
      const Index d = 1 + static_cast<Index>(gen() % static_cast<std::uint64_t>(n));
      const auto rows = random_subset_of_size(gen, n, d);
      const auto cols = random_subset_of_size(gen, n, d);
      const bool inv = is_invertible(rows, cols, n).full_rank;
      CHECK(is_invertible(cols, rows, n).full_rank == inv);
      const Index shift = static_cast<Index>(gen() % static_cast<std::uint64_t>(n));
      CHECK(is_invertible(act(rows, shift, false), cols, n).full_rank == inv);
      CHECK(is_invertible(act(rows, shift, true), cols, n).full_rank == inv);
      CHECK(is_invertible(rows, act(cols, shift, true), n).full_rank == inv);
    }
  }
}

TEST_CASE("Chebotarev: every square submatrix at prime N is invertible") {
  for (Index p : {2, 3, 5, 7, 11, 13}) {
    const Index dmax = std::min<Index>(p, 3);
    for (Index d = 1; d <= dmax; ++d) {
      const auto all = [&] {
        std::vector<IndexSet> out;
        for_each_combination(p, d, [&](std::span<const Index> c) {
          out.emplace_back(p, std::vector<Index>(c.begin(), c.end()));
          return true;
        });
        return out;
      }();
      for (const auto& rows : all) {
        for (const auto& cols : all) CHECK(is_invertible(rows, cols, p).full_rank);
      }
    }
  }
  std::mt19937_64 gen(13);
  for (Index p : {11, 13}) {
    for (int t = 0; t < 2000; ++t) {
      const Index d = 1 + static_cast<Index>(gen() % static_cast<std::uint64_t>(p));
      CHECK(is_invertible(random_subset_of_size(gen, p, d), random_subset_of_size(gen, p, d), p).full_rank);
    }
  }
}

TEST_CASE("brute-force universality oracle") {
  CHECK(brute_force_universal(IndexSet(8, {0, 1, 3, 4, 6})));
  CHECK_FALSE(brute_force_universal(IndexSet(8, {0, 1, 4, 5})));
  CHECK(brute_force_universal(IndexSet(12, {0, 5, 10, 3})));
  CHECK(brute_force_universal(IndexSet::empty(12)));
  CHECK(brute_force_universal(IndexSet::full(12)));
  CHECK_THROWS_AS(brute_force_universal(IndexSet::interval(40, 0, 20), kDefaultRankTolerance, 1000),
                  BudgetExceeded);
  const std::vector<IndexSet> wrong = {IndexSet(8, {0})};
  CHECK_THROWS_AS(brute_force_universal(IndexSet(8, {0, 1}), wrong), std::invalid_argument);
}

TEST_CASE("oracle with all column sets equals the bracelet-reduced oracle and the multiset criterion") {
  for (const auto& m : {PrimePowerModulus(2, 3), PrimePowerModulus(3, 2)}) {
    const Index n = m.size();
    std::vector<std::vector<IndexSet>> all_cols(static_cast<std::size_t>(n + 1));
    for (Index d = 0; d <= n; ++d) {
      for_each_combination(n, d, [&](std::span<const Index> c) {
        all_cols[static_cast<std::size_t>(d)].emplace_back(n, std::vector<Index>(c.begin(), c.end()));
        return true;
      });
    }
    for (oracle::Mask mask = 0; mask < (oracle::Mask{1} << n); ++mask) {
      const auto set = oracle::to_set(n, mask);
      const bool full = brute_force_universal(set, all_cols[set.size()]);
      CHECK(brute_force_universal(set) == full);
      CHECK(is_universal(set, m).universal == full);
    }
  }
}

TEST_CASE("oracle at composite non-prime-power N") {
  // Arithmetic progressions with step coprime to N are universal.
  for (Index step : {1, 5, 7, 11}) {
    for (Index d = 1; d <= 6; ++d) {
      std::vector<Index> e;
      for (Index i = 0; i < d; ++i) e.push_back((i * step) % 12);
      CHECK(brute_force_universal(IndexSet(12, e)));
    }
  }
  CHECK_FALSE(brute_force_universal(IndexSet(12, {0, 6})));
}

TEST_CASE("interpolation") {
  // DC only: one sample fixes the constant.
  const Complex c{2.5, -1.0};
  const auto dc = interpolate(std::vector<Complex>{c}, IndexSet(8, {3}), IndexSet(8, {0}));
  for (const auto& v : dc.signal.values()) CHECK(std::abs(v - c) < 1e-14);

  std::mt19937_64 gen(4);
  const IndexSet rows(8, {0, 1, 3, 4, 6});
  for (int t = 0; t < 100; ++t) {
    const auto support = random_subset_of_size(gen, 8, 5);
    const auto f = synthesize(support, gaussian(gen, 5));
    std::vector<Complex> samples;
    for (Index i : rows) samples.push_back(f[i]);
    const auto rec = interpolate(samples, rows, support);
    CHECK(relative_error(rec.signal, f) < 1e-8);
    CHECK_FALSE(rec.ill_conditioned);
    for (std::size_t k = 0; k < rows.size(); ++k) CHECK(std::abs(rec.signal[rows[k]] - samples[k]) < 1e-12);
  }

  // Duality: (I, J) works iff (J, I) works.
  for (int t = 0; t < 300; ++t) {
    const Index d = 1 + static_cast<Index>(gen() % 8);
    const auto i = random_subset_of_size(gen, 16, d);
    const auto j = random_subset_of_size(gen, 16, d);
    const std::vector<Complex> zeros(static_cast<std::size_t>(d));
    auto works = [&](const IndexSet& a, const IndexSet& b) {
      try {
        (void)interpolate(zeros, a, b);
        return true;
      } catch (const SingularSystem&) {
        return false;
      }
    };
    CHECK(works(i, j) == works(j, i));
  }

  try {
    (void)interpolate(std::vector<Complex>{1.0, 2.0}, IndexSet(4, {0, 2}), IndexSet(4, {0, 2}));
    FAIL("expected SingularSystem");
  } catch (const SingularSystem& e) {
    CHECK(e.report().numerical_rank == 1);
    CHECK_FALSE(e.report().full_rank);
  }
  CHECK_THROWS_AS(interpolate(std::vector<Complex>{1.0}, IndexSet(4, {0, 2}), IndexSet(4, {0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(interpolate(std::vector<Complex>{1.0, 1.0}, IndexSet(4, {0, 2}), IndexSet(4, {0})),
                  std::invalid_argument);
}

TEST_CASE("clustered frequencies are flagged as ill-conditioned") {
  const IndexSet rows = IndexSet::interval(64, 0, 9);
  const IndexSet support = IndexSet::interval(64, 0, 9);
  const std::vector<Complex> samples(9, Complex(1.0));
  const auto rec = interpolate(samples, rows, support);
  CHECK(rec.ill_conditioned);
  CHECK(rec.rank.condition_number() > kIllConditionedThreshold);
}

TEST_CASE("interpolating bases") {
  // Coordinate subspace: the interpolating basis is the natural one.
  const IndexSet i(6, {1, 3, 4});
  ComplexMatrix coord = ComplexMatrix::Zero(6, 3);
  for (std::size_t k = 0; k < i.size(); ++k) coord(i[k], static_cast<Eigen::Index>(k)) = 1.0;
  CHECK((interpolating_basis(coord, i) - coord).cwiseAbs().maxCoeff() < 1e-14);

  std::mt19937_64 gen(9);
  for (int t = 0; t < 50; ++t) {
    const Index n = 16;
    const Index d = 1 + static_cast<Index>(gen() % 10);
    const auto support = random_subset_of_size(gen, n, d);
    const auto rows = universal_subset_of_size(IndexSet::full(n), PrimePowerModulus(2, 4), d).example;
    const ComplexMatrix r = bandlimited_basis(support);
    const ComplexMatrix u = interpolating_basis(r, rows);
    // Kronecker property on the sample rows.
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (Eigen::Index k = 0; k < d; ++k) {
        const Complex expected = static_cast<Eigen::Index>(a) == k ? 1.0 : 0.0;
        CHECK(std::abs(u(rows[a], k) - expected) < 1e-10);
      }
    }
    // Any other basis of the same space gives the same U.
    ComplexMatrix g(d, d);
    const auto coeffs = gaussian(gen, static_cast<std::size_t>(d * d));
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) g(a, b) = coeffs[static_cast<std::size_t>(a * d + b)];
    }
    const ComplexMatrix u2 = interpolating_basis(r * g, rows);
    CHECK((u2 - u).cwiseAbs().maxCoeff() < 1e-8);
    // Starting from the interpolating basis of another sample set reproduces U.
    const auto other = find_sampling_set(r);
    const ComplexMatrix s = interpolating_basis(interpolating_basis(r, other), rows);
    CHECK((s - u).cwiseAbs().maxCoeff() < 1e-8);
  }
  CHECK_THROWS_AS(interpolating_basis(bandlimited_basis(IndexSet(4, {0, 2})), IndexSet(4, {0, 2})),
                  SingularSystem);
}

TEST_CASE("finding a sampling set") {
  for (Index d = 1; d <= 5; ++d) {
    const ComplexMatrix id = ComplexMatrix::Identity(8, d);
    CHECK(find_sampling_set(id) == IndexSet::interval(8, 0, d));
  }
  CHECK(find_sampling_set(bandlimited_basis(IndexSet::full(16))) == IndexSet::full(16));

  std::mt19937_64 gen(10);
  for (int t = 0; t < 100; ++t) {
    const Index d = 1 + static_cast<Index>(gen() % 16);
    const auto support = random_subset_of_size(gen, 16, d);
    const auto rows = find_sampling_set(bandlimited_basis(support));
    CHECK(static_cast<Index>(rows.size()) == d);
    CHECK(is_invertible(rows, support, 16).full_rank);
    (void)interpolating_basis(bandlimited_basis(support), rows);
  }
  ComplexMatrix deficient = ComplexMatrix::Zero(6, 2);
  deficient(0, 0) = 1.0;
  deficient(1, 0) = 2.0;
  CHECK_THROWS_AS(find_sampling_set(deficient), std::invalid_argument);
}

TEST_CASE("condition number and its lower bound") {
  const auto one = condition_report(IndexSet(16, {0}), IndexSet(16, {5}));
  CHECK(one.condition_number == doctest::Approx(1.0));
  CHECK(one.lower_bound == doctest::Approx(1.0));

  std::vector<Index> spread;
  for (Index k = 0; k < 8; ++k) spread.push_back(8 * k);
  const auto flat = condition_report(IndexSet::interval(64, 0, 8), IndexSet(64, spread));
  CHECK(flat.condition_number == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(flat.lower_bound == doctest::Approx(1.0).epsilon(1e-10));

  const auto clustered = condition_report(IndexSet::interval(64, 0, 8), IndexSet::interval(64, 0, 8));
  CHECK(clustered.lower_bound > 100.0);
  CHECK(clustered.condition_number >= clustered.lower_bound * (1 - 1e-9));

  std::mt19937_64 gen(12);
  for (Index n : {16, 32, 64}) {
    for (int t = 0; t < 200; ++t) {
      const Index d = 1 + static_cast<Index>(gen() % 12);
      const auto report = condition_report(IndexSet::interval(n, 0, d), random_subset_of_size(gen, n, d));
      CHECK(report.condition_number >= report.lower_bound * (1 - 1e-9));
    }
  }
  CHECK_THROWS_AS(condition_report(IndexSet(16, {1, 2}), IndexSet(16, {0, 1})), std::invalid_argument);
}
