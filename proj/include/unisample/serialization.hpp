#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unisample/counting.hpp"
#include "unisample/fourier.hpp"
#include "unisample/uncertainty.hpp"
#include "unisample/universality.hpp"

namespace unisample {

/// Insertion-ordered JSON, so output key order is stable.
using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "0,1,3..6" -> {0, 1, 3, 4, 5, 6}. Whitespace is ignored.
std::vector<Index> parse_index_list(std::string_view text);

Json to_json(const IndexSet& set);
/// Reads {"n": ..., "indices": [...]}. When `n` is given it wins over (and
/// must agree with) the "n" field.
IndexSet index_set_from_json(const Json& j, std::optional<Index> n = std::nullopt);

Json to_json(const UniversalityVerdict& verdict);
Json to_json(const UniversalDecomposition& decomposition);
Json to_json(const LevelTable& table);

Json to_json(const Signal& signal);
/// Reads {"n": ..., "values": [[re, im], ...]}; bare numbers are real values.
Signal signal_from_json(const Json& j);
/// Complex values from a JSON array of [re, im] pairs or numbers.
std::vector<Complex> complex_values_from_json(const Json& values, std::string_view field);

Json to_json(const RankReport& report);
Json to_json(const ConditionReport& report);
Json to_json(const BoundCheck& check);
Json to_json(const UncertaintyReport& report);
/// Summary with all parameters echoed; per-trial records are left out.
Json to_json(const RandomExperimentSummary& summary);
Json to_json(const SumsetReport& report);

/// Decimal form of a finite double that survives a round trip, or null for
/// infinities.
Json number_or_null(double value);

}  // namespace unisample
