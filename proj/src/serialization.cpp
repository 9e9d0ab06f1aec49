#include "unisample/serialization.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace unisample {

namespace {

Index parse_integer(std::string_view token, std::string_view whole) {
  Index value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("bad index '" + std::string(token) + "' in list '" + std::string(whole) + "'");
  }
  return value;
}

const Json& require(const Json& j, const char* field) {
  if (!j.is_object()) throw ParseError("expected a JSON object with field '" + std::string(field) + "'");
  const auto it = j.find(field);
  if (it == j.end()) throw ParseError("missing field '" + std::string(field) + "'");
  return *it;
}

Index integer_field(const Json& v, std::string_view field) {
  if (!v.is_number_integer()) throw ParseError("field '" + std::string(field) + "' must be an integer");
  return v.get<Index>();
}

}  // namespace

std::vector<Index> parse_index_list(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<Index> out;
  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (token.empty()) {
      if (comma == std::string_view::npos) break;
      throw ParseError("empty entry in index list '" + std::string(text) + "'");
    }
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_integer(token, text));
      continue;
    }
    const Index lo = parse_integer(token.substr(0, dots), text);
    const Index hi = parse_integer(token.substr(dots + 2), text);
    if (hi < lo) throw ParseError("empty range '" + std::string(token) + "'");
    for (Index i = lo; i <= hi; ++i) out.push_back(i);
  }
  return out;
}

Json to_json(const IndexSet& set) {
  Json j;
  j["n"] = set.n();
  j["indices"] = Json::array();
  for (Index i : set) j["indices"].push_back(i);
  return j;
}

IndexSet index_set_from_json(const Json& j, std::optional<Index> n) {
  const auto& indices = require(j, "indices");
  if (!indices.is_array()) throw ParseError("field 'indices' must be an array");
  std::vector<Index> elements;
  for (const auto& v : indices) elements.push_back(integer_field(v, "indices"));
  Index size;
  if (j.contains("n")) {
    size = integer_field(j["n"], "n");
    if (n && *n != size) {
      throw ParseError("field 'n' is " + std::to_string(size) + " but N = " + std::to_string(*n) +
                       " was requested");
    }
  } else if (n) {
    size = *n;
  } else {
    throw ParseError("missing field 'n'");
  }
  try {
    return IndexSet(size, std::move(elements));
  } catch (const std::invalid_argument& e) {
    throw ParseError("field 'indices': " + std::string(e.what()));
  }
}

Json to_json(const UniversalityVerdict& verdict) {
  Json j;
  j["universal"] = verdict.universal;
  if (verdict.witness) {
    j["witness"] = {{"k", verdict.witness->level}, {"a", verdict.witness->a}, {"b", verdict.witness->b}};
  }
  return j;
}

Json to_json(const UniversalDecomposition& decomposition) {
  Json pieces = Json::array();
  for (const auto& piece : decomposition.pieces) {
    Json p;
    p["k"] = piece.level;
    p["indices"] = to_json(piece.elements)["indices"];
    pieces.push_back(std::move(p));
  }
  Json j;
  j["pieces"] = std::move(pieces);
  return j;
}

Json to_json(const LevelTable& table) {
  Json levels = Json::array();
  for (int k = 0; k < table.levels(); ++k) {
    auto l = table.level(k);
    levels.push_back(Json(std::vector<Index>(l.begin(), l.end())));
  }
  return levels;
}

Json to_json(const Signal& signal) {
  Json j;
  j["n"] = signal.n();
  j["values"] = Json::array();
  for (const auto& v : signal.values()) j["values"].push_back({v.real(), v.imag()});
  return j;
}

std::vector<Complex> complex_values_from_json(const Json& values, std::string_view field) {
  const std::string name(field);
  if (!values.is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<Complex> out;
  for (const auto& v : values) {
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw ParseError("field '" + name + "' entries must be numbers or [re, im] pairs");
    }
  }
  return out;
}

Signal signal_from_json(const Json& j) {
  auto values = complex_values_from_json(require(j, "values"), "values");
  const Index n = j.contains("n") ? integer_field(j["n"], "n") : static_cast<Index>(values.size());
  try {
    return Signal(n, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError("field 'values': " + std::string(e.what()));
  }
}

Json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

Json to_json(const RankReport& report) {
  Json j;
  j["numerical_rank"] = report.numerical_rank;
  j["full_rank"] = report.full_rank;
  j["smallest_singular_value"] = report.smallest_singular_value;
  j["largest_singular_value"] = report.largest_singular_value;
  j["tolerance"] = report.tolerance;
  return j;
}

Json to_json(const ConditionReport& report) {
  Json j;
  j["condition_number"] = number_or_null(report.condition_number);
  j["lower_bound"] = number_or_null(report.lower_bound);
  j["rank"] = to_json(report.rank);
  return j;
}

Json to_json(const BoundCheck& check) {
  Json j;
  j["name"] = check.name;
  j["lhs"] = check.lhs;
  j["relation"] = check.relation;
  j["rhs"] = check.rhs;
  j["pass"] = check.pass;
  return j;
}

Json to_json(const UncertaintyReport& report) {
  Json j;
  j["n"] = report.time.signal.n();
  j["support"] = to_json(report.time.support)["indices"];
  j["spectrum_support"] = to_json(report.frequency.support)["indices"];
  j["tolerance"] = report.time.tolerance;
  j["spectrum_tolerance"] = report.frequency.tolerance;
  j["omega_zero_set"] = report.omega_zero_time;
  j["omega_spectrum_zero_set"] = report.omega_zero_frequency;
  j["phi_support"] = report.phi_support_time;
  j["phi_spectrum_support"] = report.phi_support_frequency;
  j["checks"] = Json::array();
  for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
  j["pass"] = report.all_pass();
  return j;
}

Json to_json(const RandomExperimentSummary& s) {
  Json j;
  j["experiment"] = s.experiment;
  j["rng"] = s.rng;
  j["seed"] = s.seed;
  j["n"] = s.n;
  if (s.experiment == "random-maximal") {
    j["s"] = s.size;
    j["d"] = s.d;
    j["lambda"] = s.lambda;
  } else {
    j["r"] = s.size;
    j["a"] = s.a;
  }
  j["delta"] = s.delta;
  j["threshold"] = s.threshold;
  j["trials"] = s.trials;
  j["successes"] = s.successes;
  j["empirical_probability"] = s.empirical_probability;
  j["theoretical_bound"] = s.theoretical_bound;
  j["slack"] = s.slack;
  j["passed"] = s.passed;
  return j;
}

Json to_json(const SumsetReport& r) {
  Json j;
  j["sum"] = to_json(r.sum);
  j["x_universal"] = r.x_universal;
  j["y_universal"] = r.y_universal;
  j["theorem_applies"] = r.theorem_applies;
  j["theorem_bound"] = r.theorem_bound;
  j["theorem_pass"] = r.theorem_pass;
  j["omega_x"] = r.omega_x;
  j["omega_y"] = r.omega_y;
  j["corollary_bound"] = r.corollary_bound;
  j["corollary_pass"] = r.corollary_pass;
  return j;
}

}  // namespace unisample
