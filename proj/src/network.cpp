#include "netmod/network.hpp"

#include <algorithm>

namespace netmod {

std::vector<WeightedEdge> NetworkElement::letters() const {
  std::vector<WeightedEdge> out;
  out.reserve(element_.length());
  for (const auto& l : element_.word()) out.push_back({pair_at(l.component), l.value});
  return out;
}

NetworkModel::NetworkModel(Monoid edge_monoid, Variety variety, const LawCheckConfig& cfg)
    : state_(std::make_shared<State>()) {
  // Validates M against the variety up front.
  GreenContext::uniform(SimpleGraph(0), edge_monoid, variety, cfg);
  state_->edge_monoid = std::move(edge_monoid);
  state_->variety = variety;
  state_->cfg = cfg;
}

std::string NetworkModel::name() const {
  return "Gamma(" + edge_monoid().name() + ", " + to_string(variety()) + ")";
}

ContextPtr NetworkModel::context(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  auto& slot = state_->contexts[n];
  if (!slot) {
    slot = GreenContext::uniform(kneser_graph(n, 2), state_->edge_monoid, state_->variety, state_->cfg);
  }
  return slot;
}

void NetworkModel::require_mine(const NetworkElement& g) const {
  if (!(g.element().context() == *context(g.vertex_count()))) {
    throw ContextError("network belongs to a different model than " + name());
  }
}

NetworkElement NetworkModel::unit(std::size_t n) const { return {n, green_identity(context(n))}; }

NetworkElement NetworkModel::edge(std::size_t n, std::size_t u, std::size_t v, const Element& m) const {
  return from_letters(n, {{make_edge(u, v), m}});
}

NetworkElement NetworkModel::from_letters(std::size_t n, const std::vector<WeightedEdge>& word) const {
  Word w;
  w.reserve(word.size());
  for (const auto& [e, m] : word) {
    if (e.first >= n || e.second >= n || e.first == e.second) {
      throw ContextError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "} is not an edge of the complete graph on " + std::to_string(n) + " vertices");
    }
    w.push_back({pair_index(e.first, e.second), m});
  }
  return {n, normalize(w, context(n))};
}

NetworkElement NetworkModel::overlay(const NetworkElement& g, const NetworkElement& h) const {
  if (g.vertex_count() != h.vertex_count()) throw ContextError("overlay of networks of different sizes");
  require_mine(g);
  require_mine(h);
  return {g.vertex_count(), multiply(g.element(), h.element())};
}

NetworkElement NetworkModel::disjoint(const NetworkElement& g, const NetworkElement& h) const {
  require_mine(g);
  require_mine(h);
  const auto m = g.vertex_count();
  const auto n = m + h.vertex_count();
  // Colex indexing makes KG(m,2) a prefix of KG(m+n,2), so the left
  // summand's letters keep their components.
  std::vector<std::size_t> shift(h.vertex_count());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = m + i;
  auto right = subsets_map(Injection(n, std::move(shift)), 2);
  Word w = g.element().word();
  for (const auto& l : h.element().word()) w.push_back({right[l.component], l.value});
  return {n, normalize(w, context(n))};
}

NetworkElement NetworkModel::permute(const Permutation& sigma, const NetworkElement& g) const {
  require_mine(g);
  if (sigma.size() != g.vertex_count()) throw ContextError("permutation size does not match network");
  Word w;
  w.reserve(g.element().length());
  for (const auto& l : g.element().word()) {
    auto [u, v] = pair_at(l.component);
    w.push_back({pair_index(sigma(u), sigma(v)), l.value});
  }
  return {g.vertex_count(), normalize(w, context(g.vertex_count()))};
}

bool NetworkModel::equal(const NetworkElement& g, const NetworkElement& h) const {
  if (g.vertex_count() != h.vertex_count()) return false;
  return netmod::equal(g.element(), h.element());
}

SimpleGraph NetworkModel::support(const NetworkElement& g) const {
  SimpleGraph s(g.vertex_count());
  for (const auto& [e, m] : g.letters())
    if (!edge_monoid().is_identity(m)) s.add_edge(e.first, e.second);
  return s;
}

// ---------------------------------------------------------------------------

OrdinaryNetwork OrdinaryModel::unit(std::size_t n) const {
  return {n, std::vector<Element>(binomial(n, 2), m_.identity())};
}

OrdinaryNetwork OrdinaryModel::edge(std::size_t n, std::size_t u, std::size_t v, const Element& m) const {
  if (u >= n || v >= n || u == v) throw ContextError("not an edge of the complete graph");
  auto g = unit(n);
  g.weights[pair_index(u, v)] = m;
  return g;
}

OrdinaryNetwork OrdinaryModel::overlay(const OrdinaryNetwork& g, const OrdinaryNetwork& h) const {
  if (g.n != h.n) throw ContextError("overlay of networks of different sizes");
  OrdinaryNetwork out{g.n, {}};
  out.weights.reserve(g.weights.size());
  for (std::size_t i = 0; i < g.weights.size(); ++i) out.weights.push_back(m_.op(g.weights[i], h.weights[i]));
  return out;
}

OrdinaryNetwork OrdinaryModel::disjoint(const OrdinaryNetwork& g, const OrdinaryNetwork& h) const {
  auto out = unit(g.n + h.n);
  std::copy(g.weights.begin(), g.weights.end(), out.weights.begin());
  for (std::size_t i = 0; i < h.weights.size(); ++i) {
    auto [u, v] = pair_at(i);
    out.weights[pair_index(u + g.n, v + g.n)] = h.weights[i];
  }
  return out;
}

OrdinaryNetwork OrdinaryModel::permute(const Permutation& sigma, const OrdinaryNetwork& g) const {
  if (sigma.size() != g.n) throw ContextError("permutation size does not match network");
  auto out = unit(g.n);
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    auto [u, v] = pair_at(i);
    out.weights[pair_index(sigma(u), sigma(v))] = g.weights[i];
  }
  return out;
}

bool OrdinaryModel::equal(const OrdinaryNetwork& g, const OrdinaryNetwork& h) const {
  if (g.n != h.n) return false;
  for (std::size_t i = 0; i < g.weights.size(); ++i)
    if (!m_.eq(g.weights[i], h.weights[i])) return false;
  return true;
}

SimpleGraph OrdinaryModel::support(const OrdinaryNetwork& g) const {
  SimpleGraph s(g.n);
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    if (m_.is_identity(g.weights[i])) continue;
    auto [u, v] = pair_at(i);
    s.add_edge(u, v);
  }
  return s;
}

std::vector<OrdinaryNetwork> OrdinaryModel::enumerate(std::size_t n) const {
  auto els = m_.elements();
  if (!els) throw ContextError("cannot enumerate networks over an infinite monoid");
  std::vector<OrdinaryNetwork> out{unit(n)};
  for (std::size_t i = 0; i < binomial(n, 2); ++i) {
    std::vector<OrdinaryNetwork> next;
    next.reserve(out.size() * els->size());
    for (const auto& g : out)
      for (const auto& m : *els) {
        auto h = g;
        h.weights[i] = m;
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

Permutation edge_placement(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) throw std::invalid_argument("edge_placement needs two distinct points");
  std::vector<std::size_t> img(n);
  img[0] = i;
  img[1] = j;
  std::size_t next = 0;
  for (std::size_t k = 2; k < n; ++k) {
    while (next == i || next == j) ++next;
    img[k] = next++;
  }
  return Permutation(std::move(img));
}

Permutation double_transposition(std::size_t n, std::size_t i, std::size_t j) {
  return Permutation::transposition(n, 0, i) * Permutation::transposition(n, 1, j);
}

NetworkElement induced_hom(const MonoidHom& f, const NetworkElement& g, const NetworkModel& target,
                           const LawCheckConfig& cfg) {
  const auto& ctx = g.element().context();
  if (ctx.size() > 0 && !(f.source == ctx.component(0))) {
    throw ContextError("homomorphism source does not match the network's edge monoid");
  }
  if (!(f.target == target.edge_monoid())) {
    throw ContextError("homomorphism target does not match the target model");
  }
  if (!check_hom(f, cfg)) throw ContextError("map is not a monoid homomorphism");
  std::vector<WeightedEdge> w;
  for (auto& [e, m] : g.letters()) w.push_back({e, f(m)});
  return target.from_letters(g.vertex_count(), w);
}

OrdinaryNetwork cmon_iso(const NetworkModel& model, const NetworkElement& g) {
  if (model.variety() != Variety::CMon) throw ContextError("cmon_iso needs a cmon model");
  OrdinaryModel ord(model.edge_monoid());
  auto out = ord.unit(g.vertex_count());
  const auto& m = model.edge_monoid();
  for (const auto& l : g.element().word()) out.weights[l.component] = m.op(out.weights[l.component], l.value);
  return out;
}

NetworkElement cmon_iso_inverse(const NetworkModel& model, const OrdinaryNetwork& g) {
  if (model.variety() != Variety::CMon) throw ContextError("cmon_iso needs a cmon model");
  std::vector<WeightedEdge> w;
  for (std::size_t i = 0; i < g.weights.size(); ++i) w.push_back({pair_at(i), g.weights[i]});
  return model.from_letters(g.n, w);
}

}  // namespace netmod
