#include "unisample/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "unisample/counting.hpp"
#include "unisample/dihedral.hpp"
#include "unisample/fourier.hpp"
#include "unisample/random.hpp"
#include "unisample/serialization.hpp"
#include "unisample/uncertainty.hpp"
#include "unisample/universality.hpp"

namespace unisample::cli {

namespace {

/// A command-line problem: bad flags, unreadable input, unsupported N.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json json;
  int code = kExitOk;
  std::optional<std::string> human;  ///< overrides the generic rendering
  std::optional<std::string> csv;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  unsigned threads = 1;
};

struct SizeOptions {
  std::optional<Index> n;
  std::optional<Index> p;
  std::optional<int> m;

  void add_to(CLI::App* app) {
    app->add_option("-N,--modulus", n, "Ambient size N");
    app->add_option("-p,--prime", p, "Prime p (with -M)");
    app->add_option("-M,--exponent", m, "Exponent M (with -p)");
  }

  std::optional<Index> resolve() const {
    if (p.has_value() != m.has_value()) throw UsageError("-p and -M must be given together");
    if (!p) return n;
    PrimePowerModulus mod(*p, *m);
    if (n && *n != mod.size()) {
      throw UsageError("-N " + std::to_string(*n) + " disagrees with p^M = " + std::to_string(mod.size()));
    }
    return mod.size();
  }
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in " + origin + ": " + e.what());
  }
}

/// Inline JSON, "-" for standard input, or a file path; nullopt for anything else.
std::optional<Json> load_json_source(const std::string& spec, Context& ctx) {
  const std::string text = trim(spec);
  if (text == "-") return parse_json_text(read_all(ctx.in), "standard input");
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return parse_json_text(text, "argument");
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream file(text);
    if (!file) throw UsageError("cannot read " + text);
    return parse_json_text(read_all(file), text);
  }
  return std::nullopt;
}

IndexSet index_set_from_any_json(const Json& j, std::optional<Index> n) {
  if (j.is_array()) {
    if (!n) throw UsageError("-N is required when the index set is a bare array");
    return index_set_from_json(Json{{"n", *n}, {"indices", j}}, n);
  }
  // Output of maximal/construct/minimal carries the set under "example".
  if (j.is_object() && !j.contains("indices") && j.contains("example")) {
    return index_set_from_json(j["example"], n);
  }
  return index_set_from_json(j, n);
}

IndexSet read_index_set(const std::string& spec, std::optional<Index> n, Context& ctx) {
  if (auto j = load_json_source(spec, ctx)) return index_set_from_any_json(*j, n);
  if (!n) throw UsageError("-N (or -p and -M) is required with a plain index list");
  try {
    return IndexSet(*n, parse_index_list(spec));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("index list: ") + e.what());
  }
}

PrimePowerModulus prime_power(Index n, const std::string& command) {
  auto mod = PrimePowerModulus::try_from_size(n);
  if (!mod) {
    throw UsageError("'" + command + "' needs N to be a prime power; N = " + std::to_string(n) +
                     " is not (for composite N use 'oracle')");
  }
  return *mod;
}

Index require_n(const SizeOptions& size) {
  const auto n = size.resolve();
  if (!n) throw UsageError("give -N or -p and -M");
  return *n;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string generic_human(const Json& j) {
  if (!j.is_object()) return scalar_text(j) + "\n";
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) os << key << ": " << scalar_text(value) << "\n";
  return os.str();
}

std::string csv_field(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string generic_csv(const Json& j) {
  std::ostringstream os;
  os << "key,value\n";
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) os << key << "," << csv_field(value) << "\n";
  }
  return os.str();
}

void emit(const Outcome& o, Context& ctx) {
  if (ctx.format == "human") {
    ctx.out << o.human.value_or(generic_human(o.json));
  } else if (ctx.format == "csv") {
    ctx.out << o.csv.value_or(generic_csv(o.json));
  } else {
    ctx.out << o.json.dump(2) << "\n";
  }
}

std::string records_csv(const RandomExperimentSummary& s) {
  std::ostringstream os;
  os << "trialIndex,statistic,pass\n";
  for (const auto& r : s.records) os << r.index << "," << r.statistic << "," << (r.pass ? "true" : "false") << "\n";
  return os.str();
}

// Each subcommand registers its options and returns the action to run.
using Action = std::function<Outcome()>;

void add_check(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("check", "Universality verdict under every criterion");
  auto size = std::make_shared<SizeOptions>();
  auto set_spec = std::make_shared<std::string>();
  auto expect = std::make_shared<std::string>();
  size->add_to(cmd);
  cmd->add_option("-I,--indices", *set_spec, "Index set: list, a..b ranges, JSON, file or -")->required();
  cmd->add_option("--expect", *expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"universal", "not-universal"}));
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto set = read_index_set(*set_spec, size->resolve(), ctx);
      const auto mod = prime_power(set.n(), "check");
      const auto hist = residue_histogram(set, mod);
      const auto verdict = is_universal(hist);
      Outcome o;
      o.json = to_json(verdict);
      o.json["n"] = set.n();
      o.json["size"] = set.size();
      Json criteria;
      criteria["balanced_classes"] = verdict.universal;
      criteria["chi_star"] = is_universal_via_chi_star(set, mod);
      criteria["dispersion"] = is_universal_via_dispersion(set, mod);
      if (!set.is_empty()) {
        const auto sv = schur_valuation(set, mod);
        criteria["schur_valuation"] = {
            {"numerator", sv.numerator}, {"denominator", sv.denominator}, {"coprime", sv.coprime}};
      }
      o.json["criteria"] = std::move(criteria);
      o.json["levels"] = to_json(hist);
      if (!expect->empty() && (*expect == "universal") != verdict.universal) o.code = kExitCheckFailed;
      std::ostringstream h;
      h << (verdict.universal ? "universal" : "not universal");
      if (verdict.witness) {
        h << " (level " << verdict.witness->level << ": classes " << verdict.witness->a << " and "
          << verdict.witness->b << " differ by at least 2)";
      }
      h << "\n";
      o.human = h.str();
      return o;
    };
  });
}

Json subset_json(const UniversalSubset& s) {
  Json j;
  j["size"] = s.size();
  j["example"] = to_json(s.example);
  j["levels"] = s.decomposition.levels();
  j["decomposition"] = to_json(s.decomposition);
  return j;
}

void add_set_command(CLI::App& app, Context& ctx, Action& action, const std::string& name,
                     const std::string& help,
                     std::function<Outcome(const IndexSet&, const PrimePowerModulus&, Index)> body,
                     bool with_size) {
  auto* cmd = app.add_subcommand(name, help);
  auto size = std::make_shared<SizeOptions>();
  auto set_spec = std::make_shared<std::string>();
  auto target = std::make_shared<Index>(-1);
  size->add_to(cmd);
  cmd->add_option("-I,--indices", *set_spec, "Index set: list, a..b ranges, JSON, file or -")->required();
  if (with_size) cmd->add_option("-d,--size", *target, "Target cardinality")->required();
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto set = read_index_set(*set_spec, size->resolve(), ctx);
      return body(set, prime_power(set.n(), name), *target);
    };
  });
}

void add_count(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("count", "Number of universal sets of a given size");
  auto size = std::make_shared<SizeOptions>();
  auto d = std::make_shared<Index>(0);
  auto brute = std::make_shared<bool>(false);
  auto budget = std::make_shared<std::uint64_t>(kDefaultBudget);
  size->add_to(cmd);
  cmd->add_option("-d,--size", *d, "Cardinality d")->required();
  cmd->add_flag("--brute", *brute, "Also count by exhaustive enumeration");
  cmd->add_option("--budget", *budget, "Largest number of subsets --brute may visit");
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto mod = prime_power(require_n(*size), "count");
      const auto value = count_universal(*d, mod);
      Outcome o;
      o.json["n"] = mod.size();
      o.json["d"] = *d;
      o.json["count"] = to_decimal(value);
      std::string human = to_decimal(value) + "\n";
      if (*brute) {
        const auto brute_value = count_by_brute_force(*d, mod, *budget, ctx.threads);
        o.json["brute_force"] = to_decimal(brute_value);
        o.json["match"] = brute_value == value;
        if (brute_value != value) o.code = kExitCheckFailed;
        human += to_decimal(brute_value) + (brute_value == value ? " (brute force agrees)\n" : " (brute force DISAGREES)\n");
      }
      o.human = human;
      return o;
    };
  });
}

void add_entropy(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("entropy", "Normalized log-count curve");
  auto p = std::make_shared<Index>(2);
  auto m = std::make_shared<int>(1);
  auto resolution = std::make_shared<int>(101);
  cmd->add_option("-p,--prime", *p, "Prime p")->required();
  cmd->add_option("-M,--exponent", *m, "Exponent M")->required();
  cmd->add_option("--resolution", *resolution, "Number of alpha samples in [0, 1]");
  cmd->callback([=, &ctx, &action] {
    (void)ctx;
    action = [=] {
      if (!is_prime(*p)) throw UsageError("'entropy' needs a prime p, got " + std::to_string(*p));
      const auto curve = entropy_curve(*p, *m, *resolution);
      Outcome o;
      o.json["p"] = *p;
      o.json["M"] = *m;
      o.json["points"] = Json::array();
      std::ostringstream csv;
      std::ostringstream human;
      csv.precision(17);
      human.precision(10);
      csv << "alpha,normalized_log_count,M,p\n";
      for (const auto& pt : curve) {
        o.json["points"].push_back(
            {{"alpha", pt.alpha}, {"d", pt.d}, {"normalized_log_count", pt.normalized_log_count}});
        csv << pt.alpha << "," << pt.normalized_log_count << "," << *m << "," << *p << "\n";
        human << pt.alpha << "\t" << pt.normalized_log_count << "\n";
      }
      o.csv = csv.str();
      o.human = human.str();
      return o;
    };
  });
}

void add_bracelets(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("bracelets", "Bracelet counts and canonical representatives");
  auto n = std::make_shared<Index>(0);
  auto d = std::make_shared<Index>(-1);
  auto set_spec = std::make_shared<std::string>();
  auto count = std::make_shared<bool>(false);
  auto canonical = std::make_shared<bool>(false);
  cmd->add_option("-N,--modulus", *n, "Ambient size N");
  cmd->add_option("-d,--size", *d, "Number of black beads (with --count)");
  cmd->add_option("-I,--indices", *set_spec, "Index set (with --canonical)");
  auto* count_flag = cmd->add_flag("--count", *count, "Count bracelets with d black beads");
  auto* canon_flag = cmd->add_flag("--canonical", *canonical, "Canonical representative of -I");
  count_flag->excludes(canon_flag);
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      Outcome o;
      if (*count) {
        if (*n < 1 || *d < 0) throw UsageError("--count needs -N and -d");
        const auto value = bracelet_count(*n, *d);
        o.json["n"] = *n;
        o.json["d"] = *d;
        o.json["count"] = to_decimal(value);
        o.human = to_decimal(value) + "\n";
      } else if (*canonical) {
        if (set_spec->empty()) throw UsageError("--canonical needs -I");
        const auto set = read_index_set(*set_spec, *n > 0 ? std::optional<Index>(*n) : std::nullopt, ctx);
        const auto cls = bracelet_canonical(set);
        o.json["canonical"] = to_json(cls.canonical);
        o.json["orbit_size"] = cls.orbit_size;
        o.human = cls.canonical.to_string() + " (orbit of " + std::to_string(cls.orbit_size) + ")\n";
      } else {
        throw UsageError("bracelets needs --count or --canonical");
      }
      return o;
    };
  });
}

void add_oracle(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("oracle", "Brute-force universality via DFT submatrix ranks (any N)");
  auto size = std::make_shared<SizeOptions>();
  auto set_spec = std::make_shared<std::string>();
  auto tolerance = std::make_shared<double>(kDefaultRankTolerance);
  auto budget = std::make_shared<std::uint64_t>(kDefaultBudget);
  auto expect = std::make_shared<std::string>();
  size->add_to(cmd);
  cmd->add_option("-I,--indices", *set_spec, "Index set")->required();
  cmd->add_option("--tolerance", *tolerance, "Relative singular value threshold");
  cmd->add_option("--budget", *budget, "Largest number of column sets to consider");
  cmd->add_option("--expect", *expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"universal", "not-universal"}));
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto set = read_index_set(*set_spec, size->resolve(), ctx);
      const bool universal = brute_force_universal(set, *tolerance, *budget, ctx.threads);
      Outcome o;
      o.json["n"] = set.n();
      o.json["universal"] = universal;
      o.json["tolerance"] = *tolerance;
      if (!expect->empty() && (*expect == "universal") != universal) o.code = kExitCheckFailed;
      o.human = std::string(universal ? "universal" : "not universal") + "\n";
      return o;
    };
  });
}

void add_interpolate(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("interpolate", "Reconstruct a bandlimited signal from samples");
  auto size = std::make_shared<SizeOptions>();
  auto samples_spec = std::make_shared<std::string>();
  auto support_spec = std::make_shared<std::string>();
  auto tolerance = std::make_shared<double>(kDefaultRankTolerance);
  size->add_to(cmd);
  cmd->add_option("--samples", *samples_spec, "JSON {n, indices, values} (file, inline or -)")->required();
  cmd->add_option("--support", *support_spec, "Frequency support J")->required();
  cmd->add_option("--tolerance", *tolerance, "Relative singular value threshold");
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto j = load_json_source(*samples_spec, ctx);
      if (!j) throw UsageError("--samples must be JSON (inline, a file, or -)");
      const auto sample_set = index_set_from_json(*j, size->resolve());
      if (!j->contains("values")) throw ParseError("missing field 'values'");
      const auto values = complex_values_from_json((*j)["values"], "values");
      const auto support = read_index_set(*support_spec, sample_set.n(), ctx);
      Outcome o;
      try {
        const auto rec = interpolate(values, sample_set, support, *tolerance);
        o.json["signal"] = to_json(rec.signal);
        o.json["condition_number"] = number_or_null(rec.rank.condition_number());
        o.json["ill_conditioned"] = rec.ill_conditioned;
        o.json["rank"] = to_json(rec.rank);
        if (rec.ill_conditioned) ctx.err << "warning: sampling matrix is ill-conditioned\n";
      } catch (const SingularSystem& e) {
        o.json["error"] = e.what();
        o.json["rank"] = to_json(e.report());
        o.code = kExitCheckFailed;
      }
      return o;
    };
  });
}

void add_condition(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("condition", "Condition number on rows [0, d-1] and its lower bound");
  auto size = std::make_shared<SizeOptions>();
  auto support_spec = std::make_shared<std::string>();
  size->add_to(cmd);
  cmd->add_option("--support,-J", *support_spec, "Frequency support J")->required();
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto support = read_index_set(*support_spec, size->resolve(), ctx);
      const auto rows = IndexSet::interval(support.n(), 0, static_cast<Index>(support.size()));
      const auto report = condition_report(rows, support);
      Outcome o;
      o.json = to_json(report);
      const bool holds = report.condition_number >= report.lower_bound * (1 - 1e-9);
      o.json["bound_holds"] = holds;
      if (!holds) o.code = kExitCheckFailed;
      return o;
    };
  });
}

void add_uncertainty(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("uncertainty", "Check the support/zero-set uncertainty bounds");
  auto size = std::make_shared<SizeOptions>();
  auto signal_spec = std::make_shared<std::string>();
  auto tolerance = std::make_shared<std::optional<double>>();
  size->add_to(cmd);
  cmd->add_option("--signal", *signal_spec, "Signal JSON {n, values} (file, inline or -)")->required();
  cmd->add_option("--zero-tolerance", *tolerance, "Absolute zero threshold (default relative 1e-9)");
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto j = load_json_source(*signal_spec, ctx);
      if (!j) throw UsageError("--signal must be JSON (inline, a file, or -)");
      const auto signal = signal_from_json(*j);
      if (const auto n = size->resolve(); n && *n != signal.n()) {
        throw UsageError("signal has length " + std::to_string(signal.n()) + " but N = " + std::to_string(*n));
      }
      const auto report = verify_uncertainty(signal, prime_power(signal.n(), "uncertainty"), *tolerance);
      Outcome o;
      o.json = to_json(report);
      if (!report.all_pass()) o.code = kExitCheckFailed;
      std::ostringstream h;
      for (const auto& c : report.checks) {
        h << (c.pass ? "pass  " : "FAIL  ") << c.name << ": " << c.lhs << " " << c.relation << " " << c.rhs << "\n";
      }
      o.human = h.str();
      return o;
    };
  });
}

void add_random(CLI::App& app, Context& ctx, Action& action) {
  {
    auto* cmd = app.add_subcommand("rand-maximal", "Maximal universal subsets of random s-subsets");
    auto size = std::make_shared<SizeOptions>();
    auto s = std::make_shared<Index>(0);
    auto d = std::make_shared<std::optional<Index>>();
    auto delta = std::make_shared<double>(0.5);
    auto trials = std::make_shared<std::uint64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>(0);
    size->add_to(cmd);
    cmd->add_option("-s,--sample-size", *s, "Size s of the random subsets")->required();
    cmd->add_option("-d,--size", *d, "Target d (default: largest admissible)");
    cmd->add_option("--delta", *delta, "Exponent delta > 0");
    cmd->add_option("--trials", *trials, "Number of trials");
    cmd->add_option("--seed", *seed, "PRNG seed")->required();
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        const auto mod = prime_power(require_n(*size), "rand-maximal");
        const Index target = d->value_or(largest_admissible_d(mod.size(), *s, *delta));
        const auto summary = random_maximal_experiment(mod, *s, target, *delta, *trials, *seed, ctx.threads);
        Outcome o;
        o.json = to_json(summary);
        o.csv = records_csv(summary);
        if (!summary.passed) o.code = kExitCheckFailed;
        return o;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("rand-signal", "Support sizes of random sparse signals");
    auto size = std::make_shared<SizeOptions>();
    auto r = std::make_shared<Index>(0);
    auto delta = std::make_shared<double>(1.0);
    auto trials = std::make_shared<std::uint64_t>(1000);
    auto seed = std::make_shared<std::uint64_t>(0);
    size->add_to(cmd);
    cmd->add_option("-r,--support-size", *r, "Support size r")->required();
    cmd->add_option("--delta", *delta, "Exponent delta > 0");
    cmd->add_option("--trials", *trials, "Number of trials");
    cmd->add_option("--seed", *seed, "PRNG seed")->required();
    cmd->callback([=, &ctx, &action] {
      action = [=, &ctx] {
        const auto summary = random_signal_uncertainty(require_n(*size), *r, *delta, *trials, *seed, ctx.threads);
        Outcome o;
        o.json = to_json(summary);
        o.csv = records_csv(summary);
        if (!summary.passed) o.code = kExitCheckFailed;
        return o;
      };
    });
  }
}

void add_sumset(CLI::App& app, Context& ctx, Action& action) {
  auto* cmd = app.add_subcommand("sumset", "X + Y mod N and the Cauchy-Davenport-type bounds");
  auto size = std::make_shared<SizeOptions>();
  auto x_spec = std::make_shared<std::string>();
  auto y_spec = std::make_shared<std::string>();
  size->add_to(cmd);
  cmd->add_option("-X", *x_spec, "First set")->required();
  cmd->add_option("-Y", *y_spec, "Second set")->required();
  cmd->callback([=, &ctx, &action] {
    action = [=, &ctx] {
      const auto x = read_index_set(*x_spec, size->resolve(), ctx);
      const auto y = read_index_set(*y_spec, x.n(), ctx);
      Outcome o;
      if (const auto mod = PrimePowerModulus::try_from_size(x.n())) {
        const auto report = cauchy_davenport_check(x, y, *mod);
        o.json = to_json(report);
        if (!report.theorem_pass || !report.corollary_pass) o.code = kExitCheckFailed;
      } else {
        o.json["sum"] = to_json(sumset(x, y));
      }
      o.json["periods"] = to_json(periods(sumset(x, y)))["indices"];
      return o;
    };
  });
}

void add_structural(CLI::App& app, Context& ctx, Action& action) {
  add_set_command(app, ctx, action, "maximal", "A largest universal subset",
                  [](const IndexSet& set, const PrimePowerModulus& mod, Index) {
                    const auto s = maximal_universal(set, mod);
                    Outcome o;
                    o.json = subset_json(s);
                    o.human = std::to_string(s.size()) + " " + s.example.to_string() + "\n";
                    return o;
                  },
                  false);
  add_set_command(app, ctx, action, "minimal", "A smallest universal superset",
                  [](const IndexSet& set, const PrimePowerModulus& mod, Index) {
                    const auto s = minimal_universal(set, mod);
                    Outcome o;
                    o.json["size"] = s.size;
                    o.json["example"] = to_json(s.example);
                    o.human = std::to_string(s.size) + " " + s.example.to_string() + "\n";
                    return o;
                  },
                  false);
  add_set_command(app, ctx, action, "construct", "A universal subset of prescribed size",
                  [](const IndexSet& set, const PrimePowerModulus& mod, Index d) {
                    Outcome o;
                    try {
                      const auto s = universal_subset_of_size(set, mod, d);
                      o.json = subset_json(s);
                      o.human = s.example.to_string() + "\n";
                    } catch (const Infeasible& e) {
                      o.json["error"] = e.what();
                      o.json["maximal_size"] = maximal_universal(set, mod).size();
                      o.code = kExitCheckFailed;
                    }
                    return o;
                  },
                  true);
  add_set_command(app, ctx, action, "decompose", "Elementary pieces of a universal set",
                  [](const IndexSet& set, const PrimePowerModulus& mod, Index) {
                    Outcome o;
                    try {
                      o.json = to_json(decompose(set, mod));
                    } catch (const NotUniversal& e) {
                      o.json = to_json(e.verdict());
                      o.code = kExitCheckFailed;
                    }
                    return o;
                  },
                  false);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Universal sampling sets for N = p^M", "unisample"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--threads", ctx.threads, "Worker threads for enumerations and trials")
      ->check(CLI::Range(1U, 1024U));

  Action action;
  add_check(app, ctx, action);
  add_structural(app, ctx, action);
  add_count(app, ctx, action);
  add_entropy(app, ctx, action);
  add_bracelets(app, ctx, action);
  add_oracle(app, ctx, action);
  add_interpolate(app, ctx, action);
  add_condition(app, ctx, action);
  add_uncertainty(app, ctx, action);
  add_random(app, ctx, action);
  add_sumset(app, ctx, action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "error: no subcommand\n";
    return kExitUsage;
  }

  try {
    const auto outcome = action();
    emit(outcome, ctx);
    return outcome.code;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace unisample::cli
