#pragma once

// Literal, JSON and DOT encodings. User-facing vertex labels are 1-based;
// Green components are 0-based.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "netmod/operad.hpp"

namespace netmod {

using Json = nlohmann::json;

/// "bool", "nat", "band" or "free:<alphabet>". Throws ParseError.
Monoid parse_monoid_spec(std::string_view spec);

/// Parses `v<k>:<elem> * ...`; "1" is the empty word. Throws ParseError.
Word parse_green_word(std::string_view text, const GreenContext& ctx);
std::string format_green(const GreenElement& x);

/// Parses `e(i,j)=<elem> * ...` with 1-based i, j; "1" is the empty network.
/// Throws ParseError, or ContextError for vertices outside 1..n.
std::vector<WeightedEdge> parse_network_word(std::string_view text, const Monoid& m, std::size_t n);
NetworkElement parse_network(std::string_view text, const NetworkModel& model, std::size_t n);
std::string format_network(const NetworkElement& g, const NetworkModel& model);

/// "(perm; network)" with perm in 1-based cycle notation. The profile is
/// the single arity (n; n) unless given.
OperadOperation parse_operation(std::string_view text, const NetworkModel& model, std::size_t n,
                                std::vector<std::size_t> profile = {});
std::string format_operation(const OperadOperation& op, const NetworkModel& model);

// JSON.

/// {n, monoid, variety, word: [{u, v, value}, ...]} with 1-based u, v.
Json network_to_json(const NetworkElement& g, const NetworkModel& model);
struct ParsedNetwork {
  NetworkModel model;
  NetworkElement element;
};
ParsedNetwork network_from_json(const Json& j);

/// {graph: {n, edges}, monoid, variety, word: [{component, value}, ...]}.
Json green_to_json(const GreenElement& x);
/// `fallback` is used when the document has no "monoid" field.
GreenElement green_from_json(const Json& j, const Monoid& fallback);

Json graph_to_json(const SimpleGraph& g);

// DOT.

/// One DOT edge per letter, in word order, labelled by its weight.
std::string network_to_dot(const NetworkElement& g, const NetworkModel& model);
/// Kneser graph with vertices labelled by their 1-based subsets.
std::string kneser_to_dot(std::size_t n, std::size_t k);
std::string graph_to_dot(const SimpleGraph& g, std::string_view name);

// Algebra scenarios.

struct RangeScenario {
  std::vector<RangeLimitedState> states;
};
struct BoundedScenario {
  std::vector<BoundedDegreeNetwork> states;
};

/// A scenario document:
///   {space: {type: line|plane|finite, matrix?, points?}, L, states, ops?}
/// for range-limited networks, or {k, states, ops?} for bounded-degree
/// ones. A state is {n, edges: [[u, v], ...], positions?}; positions may
/// instead be listed once for all states in space.points. Finite-space
/// points are 1-based matrix indices. Throws ParseError or ContextError.
struct Scenario {
  std::variant<RangeScenario, BoundedScenario> states;
  std::vector<std::string> ops;
};
Scenario parse_scenario(const Json& j);

Json state_to_json(const RangeLimitedState& s);
Json state_to_json(const BoundedDegreeNetwork& s);

/// Reads `text` as JSON, or the file it names when it starts with '@'.
Json load_json_argument(std::string_view text);

}  // namespace netmod
