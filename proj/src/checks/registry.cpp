#include <algorithm>
#include <set>

#include "check_util.hpp"

namespace netmod {

namespace checks {

CheckResult guarded(const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, 0, "aborted", std::string("exception: ") + e.what()};
  }
}

std::string describe_code_word(const std::string& w, const OracleAlphabet& al, const GreenContext& ctx) {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    const auto& l = al.letter(static_cast<std::uint8_t>(c));
    if (!out.empty()) out += " * ";
    out += "v" + std::to_string(l.component) + ":" + ctx.component(l.component).format(l.value);
  }
  return out;
}

std::vector<std::vector<WeightedEdge>> network_words(const NetworkModel& model, std::size_t n,
                                                     std::size_t max_len) {
  std::vector<WeightedEdge> letters;
  const auto els = model.edge_monoid().elements().value();
  for (std::size_t p = 0; p < binomial(n, 2); ++p)
    for (const auto& m : els)
      if (!model.edge_monoid().is_identity(m)) letters.push_back({pair_at(p), m});

  std::vector<std::vector<WeightedEdge>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& l : letters) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<NetworkElement> network_elements(const NetworkModel& model, std::size_t n, std::size_t max_len) {
  std::vector<NetworkElement> out;
  std::set<std::string> seen;
  for (const auto& w : network_words(model, n, max_len)) {
    auto g = model.from_letters(n, w);
    if (seen.insert(format_network(g, model)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> bounded_graphs(std::size_t n, std::size_t k) {
  const auto edges = k_subsets(n, 2);
  std::vector<SimpleGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) g.add_edge(edges[i][0], edges[i][1]);
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v) ok = ok && g.degree(v) <= k;
    if (ok) out.push_back(std::move(g));
  }
  return out;
}

std::string show(const NetworkElement& g, const NetworkModel& model) {
  return format_network(g, model) + " (n=" + std::to_string(g.vertex_count()) + ")";
}

std::string show(const SimpleGraph& g) {
  std::string out = "{";
  for (const auto& [u, v] : g.edges()) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(u + 1) + std::to_string(v + 1);
  }
  return out + "}";
}

}  // namespace checks

namespace {

Suite wrap(std::string name, std::string title, CheckResult (*body)()) {
  return {std::move(name), std::move(title), [body] { return checks::guarded(body); }};
}

}  // namespace

const std::vector<Suite>& invariant_suites() {
  static const std::vector<Suite> suites{
      wrap("algebra-core", "monoid laws and structure maps", checks::algebra_core_suite),
      wrap("green-product", "normal forms against the oracles", checks::green_product_suite),
      wrap("kneser", "Kneser graph structure and functoriality", checks::kneser_suite),
      wrap("network-model", "lax monoidal structure of network models", checks::network_model_suite),
      wrap("operad-algebras", "operad laws and algebra actions", checks::operad_algebras_suite),
      wrap("cli", "literal and JSON round trips", checks::cli_suite),
  };
  return suites;
}

const std::vector<Suite>& acceptance_suites() {
  static const std::vector<Suite> suites{
      wrap("criterion-1", "Mon normal form agrees with the shuffle-closure oracle", checks::criterion_1),
      wrap("criterion-2", "CMon and GMon normal forms agree with the congruence oracle", checks::criterion_2),
      wrap("criterion-3", "complete-graph Green products are direct products", checks::criterion_3),
      wrap("criterion-4", "Kneser graph facts", checks::criterion_4),
      wrap("criterion-5", "interchange law", checks::criterion_5),
      wrap("criterion-6", "equivariance of disjoint union", checks::criterion_6),
      wrap("criterion-7", "cmon collapse onto simple graphs", checks::criterion_7),
      wrap("criterion-8", "graphic law and commitment computation", checks::criterion_8),
      wrap("criterion-9", "bounded-degree algebra", checks::criterion_9),
      wrap("criterion-10", "range-limited algebra", checks::criterion_10),
      wrap("criterion-11", "adjunction triangle identities", checks::criterion_11),
      wrap("criterion-12", "B + B is not idempotent", checks::criterion_12),
  };
  return suites;
}

std::vector<Suite> all_suites() {
  auto out = invariant_suites();
  const auto& acc = acceptance_suites();
  out.insert(out.end(), acc.begin(), acc.end());
  return out;
}

const Suite* find_suite(std::string_view name) {
  for (const auto* list : {&invariant_suites(), &acceptance_suites()})
    for (const auto& s : *list)
      if (s.name == name) return &s;
  return nullptr;
}

}  // namespace netmod
