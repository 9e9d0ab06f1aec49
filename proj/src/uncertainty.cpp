#include "unisample/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "unisample/random.hpp"
#include "unisample/universality.hpp"

namespace unisample {

namespace {

BoundCheck at_least(std::string name, Index lhs, Index rhs) {
  return {std::move(name), lhs, ">=", rhs, lhs >= rhs};
}

std::vector<TrialRecord> run_trials(std::uint64_t trials, unsigned threads,
                                    const std::function<TrialRecord(std::uint64_t)>& trial) {
  std::vector<TrialRecord> records(trials);
  threads = std::max(1U, threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t i = t; i < trials; i += threads) records[i] = trial(i);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return records;
}

void summarize(RandomExperimentSummary& s) {
  s.trials = s.records.size();
  s.successes = static_cast<std::uint64_t>(
      std::count_if(s.records.begin(), s.records.end(), [](const TrialRecord& r) { return r.pass; }));
  s.empirical_probability = static_cast<double>(s.successes) / static_cast<double>(s.trials);
  const double b = std::clamp(s.theoretical_bound, 0.0, 1.0);
  s.slack = 3.0 * std::sqrt(b * (1.0 - b) / static_cast<double>(s.trials));
  s.passed = s.empirical_probability >= s.theoretical_bound - s.slack;
}

std::string number(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

SupportProfile support_profile(const Signal& signal, std::optional<double> tolerance) {
  const double tol = tolerance.value_or(kDefaultZeroTolerance * signal.max_abs());
  if (!(tol >= 0)) throw std::invalid_argument("zero tolerance must be nonnegative");
  std::vector<Index> support;
  std::vector<Index> zeros;
  for (Index i = 0; i < signal.n(); ++i) {
    (std::abs(signal[i]) <= tol ? zeros : support).push_back(i);
  }
  return {signal, IndexSet(signal.n(), std::move(support)), IndexSet(signal.n(), std::move(zeros)), tol};
}

bool UncertaintyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

UncertaintyReport verify_uncertainty(const Signal& signal, const PrimePowerModulus& modulus,
                                     std::optional<double> tolerance) {
  if (signal.n() != modulus.size()) {
    throw std::invalid_argument("signal length " + std::to_string(signal.n()) +
                                " does not match N = " + std::to_string(modulus.size()));
  }
  if (signal.max_abs() == 0) throw std::invalid_argument("the zero signal has no uncertainty bound");

  UncertaintyReport r;
  r.time = support_profile(signal, tolerance);
  r.frequency = support_profile(dft(signal), tolerance);
  if (r.time.support.is_empty() || r.frequency.support.is_empty()) {
    throw std::invalid_argument("signal is zero at the given tolerance");
  }
  const Index n = modulus.size();
  r.omega_zero_time = maximal_universal(r.time.zero_set, modulus).size();
  r.omega_zero_frequency = maximal_universal(r.frequency.zero_set, modulus).size();
  r.phi_support_time = minimal_universal(r.time.support, modulus).size;
  r.phi_support_frequency = minimal_universal(r.frequency.support, modulus).size;

  const auto supp_f = static_cast<Index>(r.time.support.size());
  const auto supp_ff = static_cast<Index>(r.frequency.support.size());
  const auto zero_f = static_cast<Index>(r.time.zero_set.size());
  const auto zero_ff = static_cast<Index>(r.frequency.zero_set.size());

  r.checks.push_back(at_least("supp(Ff) >= 1 + Omega(Z(f))", supp_ff, 1 + r.omega_zero_time));
  r.checks.push_back(at_least("supp(f) >= 1 + Omega(Z(Ff))", supp_f, 1 + r.omega_zero_frequency));
  r.checks.push_back(at_least("Phi(supp(f)) >= Z(Ff) + 1", r.phi_support_time, zero_ff + 1));
  r.checks.push_back(at_least("Phi(supp(Ff)) >= Z(f) + 1", r.phi_support_frequency, zero_f + 1));
  r.checks.push_back({"Phi(supp(f)) == N - Omega(Z(f))", r.phi_support_time, "==",
                      n - r.omega_zero_time, r.phi_support_time == n - r.omega_zero_time});
  if (modulus.exponent() == 1) {
    r.checks.push_back(at_least("supp(f) + supp(Ff) >= N + 1", supp_f + supp_ff, n + 1));
  }
  return r;
}

SizeCondition random_set_condition(Index n, Index s, Index d, double delta) {
  SizeCondition c;
  const double lambda = static_cast<double>(n - s) / static_cast<double>(n);
  c.lhs = lambda == 0 ? std::numeric_limits<double>::infinity()
                      : static_cast<double>(n) * std::log(1.0 / lambda);
  c.rhs = (1.0 + delta) * static_cast<double>(d) * std::log(static_cast<double>(d));
  return c;
}

Index largest_admissible_d(Index n, Index s, double delta) {
  Index d = 0;
  while (d < s && random_set_condition(n, s, d + 1, delta).holds()) ++d;
  return d;
}

RandomExperimentSummary random_maximal_experiment(const PrimePowerModulus& modulus, Index s, Index d,
                                                  double delta, std::uint64_t trials,
                                                  std::uint64_t seed, unsigned threads) {
  const Index n = modulus.size();
  if (s < 1 || s > n) throw std::invalid_argument("sample size s must lie in [1, N]");
  if (d < 1) throw std::invalid_argument("target d must be positive");
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const auto cond = random_set_condition(n, s, d, delta);
  if (!cond.holds()) {
    throw std::invalid_argument("parameters violate N log(1/lambda) >= (1 + delta) d log d: lhs " +
                                number(cond.lhs) + " < rhs " + number(cond.rhs));
  }

  RandomExperimentSummary out;
  out.experiment = "random-maximal";
  out.seed = seed;
  out.n = n;
  out.size = s;
  out.d = d;
  out.delta = delta;
  out.lambda = static_cast<double>(n - s) / static_cast<double>(n);
  out.threshold = static_cast<double>(d);
  out.theoretical_bound = 1.0 - std::pow(static_cast<double>(d), -delta);
  out.records = run_trials(trials, threads, [&](std::uint64_t i) {
    auto rng = SplitMix64::for_trial(seed, i);
    const Index omega = maximal_universal(random_subset(n, s, rng), modulus).size();
    return TrialRecord{i, omega, omega >= d};
  });
  summarize(out);
  return out;
}

double a_n_delta(Index n, double delta) {
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(n) / ((1.0 + delta) * ln) * (1.0 + std::log(1.0 + delta) + std::log(ln));
}

RandomExperimentSummary random_signal_uncertainty(Index n, Index r, double delta,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  unsigned threads) {
  if (n < 3) throw std::invalid_argument("N must be at least 3");
  if (r < 1 || r > n) throw std::invalid_argument("support size r must lie in [1, N]");
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const double a = a_n_delta(n, delta);
  if (static_cast<double>(r) >= a) {
    throw std::invalid_argument("support size r = " + std::to_string(r) +
                                " must be below a_{N,delta} = " + number(a));
  }

  RandomExperimentSummary out;
  out.experiment = "random-signal";
  out.seed = seed;
  out.n = n;
  out.size = r;
  out.delta = delta;
  out.a = a;
  out.threshold = 1.0 + a;
  out.theoretical_bound = 1.0 - std::pow(a - static_cast<double>(r), -delta);
  out.records = run_trials(trials, threads, [&](std::uint64_t i) {
    auto rng = SplitMix64::for_trial(seed, i);
    const auto support = random_subset(n, r, rng);
    auto g = Signal::zeros(n);
    for (Index k : support) {
      const auto [re, im] = rng.normal_pair();
      g[k] = {re, im};
    }
    const auto stat = static_cast<Index>(support_profile(g).support.size() +
                                         support_profile(dft(g)).support.size());
    return TrialRecord{i, stat, static_cast<double>(stat) >= out.threshold};
  });
  summarize(out);
  return out;
}

IndexSet sumset(const IndexSet& x, const IndexSet& y) {
  if (x.n() != y.n()) throw std::invalid_argument("sumset operands live in different Z_N");
  const Index n = x.n();
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Index a : x) {
    for (Index b : y) hit[static_cast<std::size_t>((a + b) % n)] = true;
  }
  return IndexSet::from_mask(n, hit);
}

IndexSet periods(const IndexSet& set) {
  const Index n = set.n();
  std::vector<Index> out;
  for (Index h = 0; h < n; ++h) {
    if (sumset(set, IndexSet(n, {h})) == set) out.push_back(h);
  }
  return IndexSet(n, std::move(out));
}

SumsetReport cauchy_davenport_check(const IndexSet& x, const IndexSet& y,
                                    const PrimePowerModulus& modulus) {
  const Index n = modulus.size();
  if (x.n() != n || y.n() != n) throw std::invalid_argument("sets must live in Z_N for the given modulus");
  SumsetReport r;
  r.sum = sumset(x, y);
  r.x_universal = is_universal(x, modulus).universal;
  r.y_universal = is_universal(y, modulus).universal;
  const auto nx = static_cast<Index>(x.size());
  const auto ny = static_cast<Index>(y.size());
  const auto ns = static_cast<Index>(r.sum.size());
  const bool nonempty = nx > 0 && ny > 0;

  r.theorem_bound = nonempty ? nx + ny - 1 : 0;
  r.theorem_applies = (r.x_universal || r.y_universal) && nonempty && nx + ny - 1 <= n;
  r.theorem_pass = !r.theorem_applies || ns >= r.theorem_bound;

  r.omega_x = maximal_universal(x, modulus).size();
  r.omega_y = maximal_universal(y, modulus).size();
  r.corollary_bound = nonempty ? std::min(n, std::max(r.omega_x + ny - 1, nx + r.omega_y - 1)) : 0;
  r.corollary_pass = ns >= r.corollary_bound;
  return r;
}

}  // namespace unisample
