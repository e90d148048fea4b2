// netmod: command-line access to network models over a monoid.
//
// Exit codes: 0 success, 1 `eq` found the networks different or a check
// failed, 2 parse error, 3 context error, 4 oracle budget exceeded.

#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "netmod/checks.hpp"
#include "netmod/io.hpp"

namespace {

using namespace netmod;

constexpr int kUnequal = 1;
constexpr int kCheckFailed = 1;
constexpr int kParseError = 2;
constexpr int kContextError = 3;
constexpr int kBudgetError = 4;

struct Options {
  std::string monoid = "bool";
  std::string variety = "mon";
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::size_t k = 2;
  std::string format = "text";
  std::vector<std::string> args;
  std::string perm;
  std::string scenario;
  std::vector<std::string> ops;
  std::string states;
  bool variety_given = false;
  bool timing = false;
};

bool is_json(const std::string& s) { return !s.empty() && (s.front() == '{' || s.front() == '@'); }

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  NetworkModel model() const { return NetworkModel(parse_monoid_spec(o_.monoid), parse_variety(o_.variety)); }

  std::size_t need_n(const char* flag = "--n") const {
    auto v = std::string(flag) == "--m" ? o_.m : o_.n;
    if (!v) throw ParseError(std::string(flag) + " is required");
    return *v;
  }

  // A network given as a literal (needs --n) or as a JSON document.
  std::pair<NetworkModel, NetworkElement> network(const std::string& arg, std::optional<std::size_t> n) const {
    if (is_json(arg)) {
      auto parsed = network_from_json(load_json_argument(arg));
      return {parsed.model, parsed.element};
    }
    if (!n) throw ParseError("--n is required for network literals");
    auto mdl = model();
    auto g = parse_network(arg, mdl, *n);
    return {mdl, g};
  }

  void print(const NetworkElement& g, const NetworkModel& mdl, std::ostream& out) const {
    if (o_.format == "json") {
      out << network_to_json(g, mdl).dump() << "\n";
    } else if (o_.format == "dot") {
      out << network_to_dot(g, mdl);
    } else {
      out << format_network(g, mdl) << "\n";
    }
  }

 private:
  const Options& o_;
};

int cmd_normalize(const Options& o, std::ostream& out) {
  Session s(o);
  const auto& arg = o.args.at(0);
  if (is_json(arg)) {
    auto j = load_json_argument(arg);
    if (j.contains("graph")) {
      auto x = green_from_json(j, parse_monoid_spec(o.monoid));
      out << (o.format == "json" ? green_to_json(x).dump() : format_green(x)) << "\n";
      return 0;
    }
  }
  auto [mdl, g] = s.network(arg, o.n);
  s.print(g, mdl, out);
  return 0;
}

int cmd_eq(const Options& o, std::ostream& out) {
  Session s(o);
  auto [ma, a] = s.network(o.args.at(0), o.n);
  auto [mb, b] = s.network(o.args.at(1), o.n);
  if (!(ma.edge_monoid() == mb.edge_monoid()) || ma.variety() != mb.variety()) {
    throw ContextError("networks come from different models: " + ma.name() + " and " + mb.name());
  }
  const bool same = ma.equal(a, b);
  out << (same ? "equal" : "not equal") << "\n";
  return same ? 0 : kUnequal;
}

int cmd_overlay(const Options& o, std::ostream& out) {
  Session s(o);
  auto [mdl, a] = s.network(o.args.at(0), o.n);
  auto [mb, b] = s.network(o.args.at(1), o.n);
  (void)mb;
  s.print(mdl.overlay(a, b), mdl, out);
  return 0;
}

int cmd_disjoint(const Options& o, std::ostream& out) {
  Session s(o);
  auto [mdl, a] = s.network(o.args.at(0), o.m);
  auto [mb, b] = s.network(o.args.at(1), o.n);
  (void)mb;
  s.print(mdl.disjoint(a, b), mdl, out);
  return 0;
}

int cmd_permute(const Options& o, std::ostream& out) {
  Session s(o);
  auto [mdl, g] = s.network(o.args.at(0), o.n);
  auto sigma = Permutation::parse_cycles(o.perm, g.vertex_count());
  s.print(mdl.permute(sigma, g), mdl, out);
  return 0;
}

int cmd_kneser(const Options& o, std::ostream& out) {
  auto parse = [](const std::string& t) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size() || t.empty() || t.front() == '-') throw ParseError("expected a count, got '" + t + "'");
    return static_cast<std::size_t>(v);
  };
  const auto n = parse(o.args.at(0));
  const auto k = parse(o.args.at(1));
  if (o.format == "json") {
    Json labels = Json::array();
    for (const auto& s : k_subsets(n, k)) {
      Json l = Json::array();
      for (auto x : s) l.push_back(x + 1);
      labels.push_back(l);
    }
    auto j = graph_to_json(kneser_graph(n, k));
    j["subsets"] = std::move(labels);
    out << j.dump() << "\n";
  } else {
    out << kneser_to_dot(n, k);
  }
  return 0;
}

template <typename State>
Json states_json(const std::vector<State>& states) {
  Json arr = Json::array();
  for (const auto& s : states) arr.push_back(state_to_json(s));
  return arr;
}

int cmd_act(const Options& o, std::ostream& out) {
  Json doc;
  if (!o.scenario.empty()) {
    doc = load_json_argument("@" + o.scenario);
  } else {
    if (o.states.empty()) throw ParseError("act needs --scenario or --states");
    doc = load_json_argument(o.states);
    if (doc.is_array()) doc = Json{{"k", o.k}, {"states", doc}};
  }
  auto sc = parse_scenario(doc);
  auto ops = sc.ops;
  ops.insert(ops.end(), o.ops.begin(), o.ops.end());
  if (ops.empty()) throw ParseError("no operations given (use --op or the scenario's ops)");

  auto opts = o;
  const bool bounded = std::holds_alternative<BoundedScenario>(sc.states);
  if (bounded && !o.variety_given) opts.variety = "gmon";
  auto mdl = Session(opts).model();

  auto run = [&](auto states, auto act) {
    for (const auto& text : ops) {
      std::vector<std::size_t> profile;
      std::size_t n = 0;
      for (const auto& s : states) {
        profile.push_back(s.graph.vertex_count());
        n += profile.back();
      }
      auto op = parse_operation(text, mdl, n, profile);
      states = {act(op, states)};
    }
    const auto& result = states.front();
    if (o.format == "json") {
      out << state_to_json(result).dump() << "\n";
    } else {
      std::string edges;
      for (const auto& [u, v] : result.graph.edges()) {
        edges += (edges.empty() ? "" : " ") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
      }
      out << "n=" << result.graph.vertex_count() << " edges: " << (edges.empty() ? "(none)" : edges) << "\n";
    }
  };
  if (bounded) {
    run(std::get<BoundedScenario>(sc.states).states, [&](const OperadOperation& op, const auto& states) {
      return full_bounded_degree_action(mdl, op, states);
    });
  } else {
    run(std::get<RangeScenario>(sc.states).states,
        [&](const OperadOperation& op, const auto& states) { return act_range_limited(op, mdl, states); });
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto& name = o.args.at(0);
  std::vector<Suite> suites;
  if (name == "list") {
    for (const auto& s : all_suites()) out << s.name << "  " << s.title << "\n";
    return 0;
  }
  if (name == "all") {
    suites = all_suites();
  } else if (name == "acceptance") {
    suites = acceptance_suites();
  } else {
    const auto* s = find_suite(name);
    if (!s) throw ParseError("unknown suite '" + name + "' (try `netmod check list`)");
    suites.push_back(*s);
  }
  for (const auto& s : suites) {
    const auto start = std::chrono::steady_clock::now();
    auto r = s.run();
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (r.passed ? "PASS " : "FAIL ") << s.name << ": " << s.title;
    if (o.timing) out << " [" << secs << "s]";
    out << "\n      " << r.cases << " cases; " << r.summary << "\n";
    if (!r.passed) {
      out << "      counterexample: " << r.counterexample << "\n";
      return kCheckFailed;
    }
  }
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  auto opts = o;
  if (opts.format == "text") opts.format = "dot";
  Session s(opts);
  auto [mdl, g] = s.network(o.args.at(0), o.n);
  s.print(g, mdl, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free network models over a monoid: normal forms, operations, algebras and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--monoid", o.monoid, "Edge monoid: bool, nat, band or free:<alphabet>")->capture_default_str();
  auto* variety = app.add_option("--variety", o.variety, "Variety: mon, cmon or gmon")->capture_default_str();
  app.add_option("--n", o.n, "Vertex count (of the right summand for disjoint)");
  app.add_option("--k", o.k, "Degree bound for bounded-degree states")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the canonical form of a network or Green word");
  normalize_cmd->add_option("network", o.args, "Literal such as \"e(1,2)=T * e(3,4)=T\", or JSON / @file")
      ->required()
      ->expected(1);

  auto* eq_cmd = app.add_subcommand("eq", "Exit 0 if two networks are equal, 1 otherwise");
  eq_cmd->add_option("networks", o.args, "Two networks")->required()->expected(2);

  auto* overlay_cmd = app.add_subcommand("overlay", "Overlay two networks on the same vertices");
  overlay_cmd->add_option("networks", o.args, "Two networks")->required()->expected(2);

  auto* disjoint_cmd = app.add_subcommand("disjoint", "Disjoint union: g on --m vertices, h on --n vertices");
  disjoint_cmd->add_option("--m", o.m, "Vertex count of the left summand");
  disjoint_cmd->add_option("networks", o.args, "Two networks")->required()->expected(2);

  auto* permute_cmd = app.add_subcommand("permute", "Relabel vertices by a permutation");
  permute_cmd->add_option("--perm", o.perm, "Cycle notation, e.g. \"(1 2)(3 4)\"")->required();
  permute_cmd->add_option("network", o.args, "Network")->required()->expected(1);

  auto* kneser_cmd = app.add_subcommand("kneser", "Emit KG(n, k) as DOT");
  kneser_cmd->add_option("sizes", o.args, "n k")->required()->expected(2);

  auto* act_cmd = app.add_subcommand("act", "Act on range-limited or bounded-degree states");
  act_cmd->add_option("--scenario", o.scenario, "Scenario JSON file");
  act_cmd->add_option("--op", o.ops, "Operation \"(perm; network)\"; repeatable");
  act_cmd->add_option("--states", o.states, "States as JSON text or @file");

  auto* check_cmd = app.add_subcommand("check", "Run a named property suite, `all`, `acceptance` or `list`");
  check_cmd->add_option("suite", o.args, "Suite name")->required()->expected(1);
  check_cmd->add_flag("--timing", o.timing, "Print the time taken by each suite");

  auto* export_cmd = app.add_subcommand("export", "Export a network as DOT (default) or JSON");
  export_cmd->add_option("network", o.args, "Network")->required()->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  o.variety_given = variety->count() > 0;

  const std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands{
      {normalize_cmd, cmd_normalize}, {eq_cmd, cmd_eq},         {overlay_cmd, cmd_overlay},
      {disjoint_cmd, cmd_disjoint},   {permute_cmd, cmd_permute}, {kneser_cmd, cmd_kneser},
      {act_cmd, cmd_act},             {check_cmd, cmd_check},     {export_cmd, cmd_export},
  };
  try {
    for (const auto& [cmd, fn] : commands)
      if (cmd->parsed()) return fn(o, std::cout);
  } catch (const netmod::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const netmod::ContextError& e) {
    std::cerr << "context error: " << e.what() << "\n";
    return kContextError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "context error: " << e.what() << "\n";
    return kContextError;
  } catch (const netmod::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetError;
  }
  return 0;
}
