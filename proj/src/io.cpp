#include "netmod/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace netmod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside double quotes and brackets.
std::vector<std::string_view> split_top(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

bool is_unit_literal(std::string_view text) {
  text = trim(text);
  return text.empty() || text == "1";
}

std::string element_json_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned() || v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw ParseError("weights must be strings or integers, got " + v.dump());
}

template <typename T>
T json_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

std::size_t vertex_from_label(std::int64_t label, std::size_t n) {
  if (label < 1 || static_cast<std::size_t>(label) > n) {
    throw ContextError("vertex " + std::to_string(label) + " is outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(label - 1);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Monoid parse_monoid_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec == "bool") return boolean_monoid();
  if (spec == "nat") return nat_monoid();
  if (spec == "band") return path_band_monoid();
  if (spec.substr(0, 5) == "free:") {
    if (spec.size() == 5) throw ParseError("free monoid needs an alphabet, e.g. free:ab");
    return free_monoid(std::string(spec.substr(5)));
  }
  throw ParseError("unknown monoid '" + std::string(spec) + "' (expected bool, nat, band or free:<alphabet>)");
}

// ---------------------------------------------------------------------------

Word parse_green_word(std::string_view text, const GreenContext& ctx) {
  Word w;
  if (is_unit_literal(text)) return w;
  for (auto term : split_top(text, '*')) {
    term = trim(term);
    if (term == "1") continue;
    auto colon = term.find(':');
    if (term.size() < 2 || term.front() != 'v' || colon == std::string_view::npos) {
      throw ParseError("expected 'v<k>:<elem>', got '" + std::string(term) + "'");
    }
    auto v = parse_count(term.substr(1, colon - 1), "component");
    if (v >= ctx.size()) throw ContextError("component " + std::to_string(v) + " is not in the index graph");
    w.push_back({v, ctx.component(v).parse(term.substr(colon + 1))});
  }
  return w;
}

std::string format_green(const GreenElement& x) {
  if (x.is_identity()) return "1";
  std::string out;
  for (const auto& l : x.word()) {
    if (!out.empty()) out += " * ";
    out += "v" + std::to_string(l.component) + ":" + x.context().component(l.component).format(l.value);
  }
  return out;
}

std::vector<WeightedEdge> parse_network_word(std::string_view text, const Monoid& m, std::size_t n) {
  std::vector<WeightedEdge> w;
  if (is_unit_literal(text)) return w;
  for (auto term : split_top(text, '*')) {
    term = trim(term);
    if (term == "1") continue;
    auto close = term.find(')');
    if (term.substr(0, 2) != "e(" || close == std::string_view::npos || close + 1 >= term.size() ||
        term[close + 1] != '=') {
      throw ParseError("expected 'e(i,j)=<elem>', got '" + std::string(term) + "'");
    }
    auto ends = split_top(term.substr(2, close - 2), ',');
    if (ends.size() != 2) throw ParseError("an edge needs two endpoints: '" + std::string(term) + "'");
    auto u = parse_count(ends[0], "vertex");
    auto v = parse_count(ends[1], "vertex");
    if (u == v) throw ContextError("loop e(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    auto iu = vertex_from_label(static_cast<std::int64_t>(u), n);
    auto iv = vertex_from_label(static_cast<std::int64_t>(v), n);
    w.push_back({make_edge(iu, iv), m.parse(term.substr(close + 2))});
  }
  return w;
}

NetworkElement parse_network(std::string_view text, const NetworkModel& model, std::size_t n) {
  return model.from_letters(n, parse_network_word(text, model.edge_monoid(), n));
}

std::string format_network(const NetworkElement& g, const NetworkModel& model) {
  const auto letters = g.letters();
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& [e, m] : letters) {
    if (!out.empty()) out += " * ";
    out += "e(" + std::to_string(e.first + 1) + "," + std::to_string(e.second + 1) +
           ")=" + model.edge_monoid().format(m);
  }
  return out;
}

OperadOperation parse_operation(std::string_view text, const NetworkModel& model, std::size_t n,
                                std::vector<std::size_t> profile) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("expected '(perm; network)', got '" + std::string(text) + "'");
  }
  auto inner = text.substr(1, text.size() - 2);
  auto semi = inner.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' in operation '" + std::string(text) + "'");
  auto sigma = Permutation::parse_cycles(inner.substr(0, semi), n);
  auto g = parse_network(inner.substr(semi + 1), model, n);
  if (profile.empty()) profile = {n};
  return {std::move(profile), std::move(sigma), std::move(g)};
}

std::string format_operation(const OperadOperation& op, const NetworkModel& model) {
  return "(" + op.sigma().to_cycles() + "; " + format_network(op.network(), model) + ")";
}

// ---------------------------------------------------------------------------

Json network_to_json(const NetworkElement& g, const NetworkModel& model) {
  Json word = Json::array();
  for (const auto& [e, m] : g.letters()) {
    word.push_back({{"u", e.first + 1}, {"v", e.second + 1}, {"value", model.edge_monoid().format(m)}});
  }
  return {{"n", g.vertex_count()},
          {"monoid", model.edge_monoid().name()},
          {"variety", to_string(model.variety())},
          {"word", std::move(word)}};
}

ParsedNetwork network_from_json(const Json& j) {
  auto n = json_field<std::size_t>(j, "n");
  auto m = parse_monoid_spec(json_field<std::string>(j, "monoid"));
  auto variety = parse_variety(json_field<std::string>(j, "variety"));
  NetworkModel model(m, variety);
  std::vector<WeightedEdge> w;
  for (const auto& l : json_field<Json>(j, "word")) {
    auto u = vertex_from_label(json_field<std::int64_t>(l, "u"), n);
    auto v = vertex_from_label(json_field<std::int64_t>(l, "v"), n);
    if (u == v) throw ContextError("loops are not edges");
    w.push_back({make_edge(u, v), m.parse(element_json_text(json_field<Json>(l, "value")))});
  }
  auto g = model.from_letters(n, w);
  return {std::move(model), std::move(g)};
}

Json graph_to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json green_to_json(const GreenElement& x) {
  const auto& ctx = x.context();
  Json word = Json::array();
  for (const auto& l : x.word()) {
    word.push_back({{"component", l.component}, {"value", ctx.component(l.component).format(l.value)}});
  }
  Json out{{"graph", graph_to_json(ctx.graph())}, {"variety", to_string(ctx.variety())}, {"word", std::move(word)}};
  if (ctx.size() > 0) out["monoid"] = ctx.component(0).name();
  return out;
}

GreenElement green_from_json(const Json& j, const Monoid& fallback) {
  const auto graph = json_field<Json>(j, "graph");
  const auto n = json_field<std::size_t>(graph, "n");
  SimpleGraph g(n);
  for (const auto& e : json_field<Json>(graph, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph edges are [u, v] pairs");
    auto u = e[0].get<std::size_t>();
    auto v = e[1].get<std::size_t>();
    if (u >= n || v >= n || u == v) throw ContextError("bad edge " + e.dump());
    g.add_edge(u, v);
  }
  auto m = j.contains("monoid") ? parse_monoid_spec(json_field<std::string>(j, "monoid")) : fallback;
  auto ctx = GreenContext::uniform(std::move(g), m, parse_variety(json_field<std::string>(j, "variety")));
  Word w;
  for (const auto& l : json_field<Json>(j, "word")) {
    auto c = json_field<std::size_t>(l, "component");
    if (c >= n) throw ContextError("component " + std::to_string(c) + " is not in the index graph");
    w.push_back({c, m.parse(element_json_text(json_field<Json>(l, "value")))});
  }
  return normalize(w, ctx);
}

// ---------------------------------------------------------------------------

std::string network_to_dot(const NetworkElement& g, const NetworkModel& model) {
  std::ostringstream out;
  out << "graph network {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
  std::size_t step = 0;
  for (const auto& [e, m] : g.letters()) {
    out << "  " << e.first + 1 << " -- " << e.second + 1 << " [label=\""
        << dot_escape(model.edge_monoid().format(m)) << "\", order=" << ++step << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string kneser_to_dot(std::size_t n, std::size_t k) {
  const auto subsets = k_subsets(n, k);
  const auto kg = kneser_graph(n, k);
  auto label = [&](std::size_t i) {
    std::string s;
    for (auto x : subsets[i]) {
      if (n > 9 && !s.empty()) s += ",";
      s += std::to_string(x + 1);
    }
    return s;
  };
  std::ostringstream out;
  out << "graph KG_" << n << "_" << k << " {\n";
  for (std::size_t i = 0; i < subsets.size(); ++i) out << "  s" << i << " [label=\"" << label(i) << "\"];\n";
  for (const auto& [u, v] : kg.edges()) out << "  s" << u << " -- s" << v << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

SimpleGraph state_graph(const Json& s, std::size_t n) {
  SimpleGraph g(n);
  if (!s.contains("edges")) return g;
  for (const auto& e : json_field<Json>(s, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("state edges are [u, v] pairs");
    auto u = vertex_from_label(e[0].get<std::int64_t>(), n);
    auto v = vertex_from_label(e[1].get<std::int64_t>(), n);
    if (u == v) throw ContextError("loops are not edges");
    g.add_edge(u, v);
  }
  return g;
}

Point parse_point(const Json& p, const MetricSpace& space) {
  Point out;
  if (p.is_number()) {
    out.push_back(p.get<double>());
  } else if (p.is_array()) {
    for (const auto& x : p) out.push_back(x.get<double>());
  } else {
    throw ParseError("a position is a number or an array of numbers");
  }
  // Finite-space points are written 1-based.
  if (space.kind() == MetricSpace::Kind::Finite && out.size() == 1) out[0] -= 1;
  if (!space.contains(out)) throw ContextError("position " + p.dump() + " is not a point of the space");
  return out;
}

MetricSpace parse_space(const Json& s) {
  auto type = json_field<std::string>(s, "type");
  if (type == "line") return MetricSpace::line();
  if (type == "plane") return MetricSpace::plane();
  if (type == "finite") return MetricSpace::finite(json_field<std::vector<std::vector<double>>>(s, "matrix"));
  throw ParseError("unknown space type '" + type + "' (expected line, plane or finite)");
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw ParseError("a scenario is a JSON object");
  Scenario out;
  if (j.contains("ops")) {
    for (const auto& op : j.at("ops")) {
      if (!op.is_string()) throw ParseError("operations are strings '(perm; network)'");
      out.ops.push_back(op.get<std::string>());
    }
  }
  const auto states = json_field<Json>(j, "states");
  if (!states.is_array()) throw ParseError("'states' must be an array");

  if (j.contains("k")) {
    BoundedScenario b;
    const auto k = json_field<std::size_t>(j, "k");
    for (const auto& s : states) b.states.push_back(make_bounded(k, state_graph(s, json_field<std::size_t>(s, "n"))));
    out.states = std::move(b);
    return out;
  }

  const auto space_json = json_field<Json>(j, "space");
  auto range = std::make_shared<RangeLimit>(RangeLimit{parse_space(space_json), json_field<double>(j, "L")});
  std::vector<Point> shared;
  if (space_json.contains("points")) {
    for (const auto& p : space_json.at("points")) shared.push_back(parse_point(p, range->space));
  }
  RangeScenario r;
  std::size_t offset = 0;
  for (const auto& s : states) {
    const auto n = json_field<std::size_t>(s, "n");
    std::vector<Point> pos;
    if (s.contains("positions")) {
      for (const auto& p : s.at("positions")) pos.push_back(parse_point(p, range->space));
    } else {
      if (offset + n > shared.size()) throw ParseError("state has no positions and space.points runs out");
      pos.assign(shared.begin() + static_cast<std::ptrdiff_t>(offset),
                 shared.begin() + static_cast<std::ptrdiff_t>(offset + n));
    }
    offset += n;
    r.states.push_back(make_range_state(range, state_graph(s, n), std::move(pos)));
  }
  out.states = std::move(r);
  return out;
}

Json state_to_json(const RangeLimitedState& s) {
  Json edges = Json::array();
  for (const auto& [u, v] : s.graph.edges()) edges.push_back({u + 1, v + 1});
  Json pos = Json::array();
  const bool finite = s.range->space.kind() == MetricSpace::Kind::Finite;
  for (const auto& p : s.positions) {
    if (finite) {
      pos.push_back(p[0] + 1);
    } else if (p.size() == 1) {
      pos.push_back(p[0]);
    } else {
      pos.push_back(p);
    }
  }
  return {{"n", s.graph.vertex_count()}, {"edges", std::move(edges)}, {"positions", std::move(pos)}};
}

Json state_to_json(const BoundedDegreeNetwork& s) {
  Json edges = Json::array();
  for (const auto& [u, v] : s.graph.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", s.graph.vertex_count()}, {"k", s.k}, {"edges", std::move(edges)}};
}

Json load_json_argument(std::string_view text) {
  std::string body;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in{std::string(text.substr(1))};
    if (!in) throw ParseError("cannot read '" + std::string(text.substr(1)) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  } else {
    body = std::string(text);
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace netmod
