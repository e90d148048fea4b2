#include "netmod/operad.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netmod {

OperadOperation::OperadOperation(std::vector<std::size_t> profile, Permutation sigma, NetworkElement g)
    : profile_(std::move(profile)), sigma_(std::move(sigma)), g_(std::move(g)) {
  const auto n = std::accumulate(profile_.begin(), profile_.end(), std::size_t{0});
  if (n != g_.vertex_count()) throw ContextError("arity profile does not sum to the network size");
  if (sigma_.size() != n) throw ContextError("permutation does not act on the output size");
}

OperadOperation OperadOperation::identity(const NetworkModel& model, std::size_t n) {
  return {{n}, Permutation::identity(n), model.unit(n)};
}

OperadOperation operad_compose(const NetworkModel& model, const OperadOperation& outer,
                               const std::vector<OperadOperation>& inners) {
  if (inners.size() != outer.arity()) throw ContextError("wrong number of inner operations");
  std::vector<std::size_t> profile;
  Permutation tau;
  std::optional<NetworkElement> h;
  for (std::size_t i = 0; i < inners.size(); ++i) {
    const auto& in = inners[i];
    if (in.output_size() != outer.profile()[i]) {
      throw ContextError("inner operation " + std::to_string(i) + " has the wrong output size");
    }
    profile.insert(profile.end(), in.profile().begin(), in.profile().end());
    tau = i == 0 ? in.sigma() : tau + in.sigma();
    h = i == 0 ? in.network() : model.disjoint(*h, in.network());
  }
  if (!h) {
    // Nullary outer operation: nothing to plug in.
    return outer;
  }
  const auto& sigma = outer.sigma();
  return {std::move(profile), sigma * tau, model.overlay(outer.network(), model.permute(sigma, *h))};
}

bool operations_equal(const NetworkModel& model, const OperadOperation& a, const OperadOperation& b) {
  return a.profile() == b.profile() && a.sigma() == b.sigma() && model.equal(a.network(), b.network());
}

std::size_t degree(const SimpleGraph& h, std::size_t v) {
  if (v >= h.vertex_count()) throw std::out_of_range("vertex out of range");
  return h.degree(v);
}

bool is_k_bounded(const SimpleGraph& h, std::size_t k) {
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > k) return false;
  return true;
}

SimpleGraph permute_graph(const Permutation& sigma, const SimpleGraph& h) {
  if (sigma.size() != h.vertex_count()) throw ContextError("permutation size does not match graph");
  SimpleGraph out(h.vertex_count());
  for (const auto& [u, v] : h.edges()) out.add_edge(sigma(u), sigma(v));
  return out;
}

SimpleGraph graph_union(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count()) throw ContextError("union of graphs of different sizes");
  SimpleGraph out = a;
  for (const auto& [u, v] : b.edges()) out.add_edge(u, v);
  return out;
}

namespace {

void check_profile(const OperadOperation& op, const std::vector<std::size_t>& sizes) {
  if (sizes != op.profile()) throw ContextError("states do not match the operation's arity profile");
}

}  // namespace

// ---------------------------------------------------------------------------

MetricSpace MetricSpace::finite(std::vector<std::vector<double>> d) {
  const auto n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) throw ContextError("distance matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < 0 || (i == j) != (d[i][j] == 0.0)) throw ContextError("distance matrix is not positive definite");
      if (d[i][j] != d[j][i]) throw ContextError("distance matrix is not symmetric");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d[i][k] > d[i][j] + d[j][k] + 1e-12) throw ContextError("distance matrix violates the triangle inequality");
  return MetricSpace(Kind::Finite, std::move(d));
}

bool MetricSpace::contains(const Point& p) const {
  switch (kind_) {
    case Kind::Line:
      return p.size() == 1;
    case Kind::Plane:
      return p.size() == 2;
    case Kind::Finite:
      return p.size() == 1 && p[0] >= 0 && p[0] == std::floor(p[0]) && p[0] < static_cast<double>(d_.size());
  }
  return false;
}

double MetricSpace::distance(const Point& a, const Point& b) const {
  if (!contains(a) || !contains(b)) throw ContextError("point outside the metric space");
  switch (kind_) {
    case Kind::Line:
      return std::abs(a[0] - b[0]);
    case Kind::Plane:
      return std::hypot(a[0] - b[0], a[1] - b[1]);
    case Kind::Finite:
      return d_[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])];
  }
  return 0.0;
}

RangeLimitedState make_range_state(std::shared_ptr<const RangeLimit> range, SimpleGraph graph,
                                   std::vector<Point> positions) {
  if (!range || range->limit < 0) throw ContextError("range limit must be nonnegative");
  if (positions.size() != graph.vertex_count()) throw ContextError("need one position per vertex");
  RangeLimitedState s{std::move(range), std::move(graph), std::move(positions)};
  for (const auto& p : s.positions)
    if (!s.range->space.contains(p)) throw ContextError("position outside the metric space");
  if (!satisfies_range(s)) throw ContextError("an edge is longer than the range limit");
  return s;
}

bool satisfies_range(const RangeLimitedState& s) {
  for (const auto& [u, v] : s.graph.edges())
    if (s.range->space.distance(s.positions[u], s.positions[v]) > s.range->limit) return false;
  return true;
}

RangeLimitedState act_range_limited(const OperadOperation& op, const NetworkModel& model,
                                    const std::vector<RangeLimitedState>& states) {
  std::vector<std::size_t> sizes;
  for (const auto& s : states) {
    sizes.push_back(s.graph.vertex_count());
    if (!states.empty() && s.range != states.front().range &&
        !(s.range->space == states.front().range->space && s.range->limit == states.front().range->limit)) {
      throw ContextError("states live in different range-limited algebras");
    }
  }
  check_profile(op, sizes);
  if (states.empty()) throw ContextError("range-limited action needs at least one state");

  const auto n = op.output_size();
  SimpleGraph placed(0);
  std::vector<Point> pos;
  for (const auto& s : states) {
    placed = graph_sum(placed, s.graph);
    pos.insert(pos.end(), s.positions.begin(), s.positions.end());
  }
  const auto& sigma = op.sigma();
  SimpleGraph graph = permute_graph(sigma, placed);
  std::vector<Point> moved(n);
  for (std::size_t v = 0; v < n; ++v) moved[sigma(v)] = pos[v];

  const auto& range = *states.front().range;
  const auto support = model.support(op.network());
  for (const auto& [u, v] : support.edges()) {
    if (range.space.distance(moved[u], moved[v]) <= range.limit) graph.add_edge(u, v);
  }
  return {states.front().range, std::move(graph), std::move(moved)};
}

// ---------------------------------------------------------------------------

BoundedDegreeNetwork make_bounded(std::size_t k, SimpleGraph graph) {
  if (!is_k_bounded(graph, k)) throw ContextError("graph is not " + std::to_string(k) + "-bounded");
  return {k, std::move(graph)};
}

namespace {

void require_commitment_model(const NetworkModel& model) {
  if (model.variety() != Variety::GMon || !(model.edge_monoid() == boolean_monoid())) {
    throw ContextError("bounded-degree networks are acted on by the gmon model over bool");
  }
}

}  // namespace

BoundedDegreeNetwork act_bounded_degree_word(const NetworkModel& model, const std::vector<Edge>& word,
                                             const BoundedDegreeNetwork& h,
                                             const std::vector<Edge>& lift_order) {
  require_commitment_model(model);
  if (!is_k_bounded(h.graph, h.k)) throw ContextError("state violates its degree bound");
  const auto n = h.graph.vertex_count();
  const auto T = boolean_monoid().parse("T");

  std::vector<WeightedEdge> lift;
  for (const auto& e : lift_order) lift.push_back({e, T});
  auto current = model.from_letters(n, lift);
  if (!(model.support(current) == h.graph)) throw ContextError("lift order does not list the state's edges");

  for (const auto& e : word) {
    auto candidate = model.overlay(current, model.edge(n, e.first, e.second, T));
    if (is_k_bounded(model.support(candidate), h.k)) current = std::move(candidate);
  }
  return {h.k, model.support(current)};
}

BoundedDegreeNetwork act_bounded_degree(const NetworkModel& model, const NetworkElement& g,
                                        const BoundedDegreeNetwork& h) {
  if (g.vertex_count() != h.graph.vertex_count()) throw ContextError("network and state differ in size");
  std::vector<Edge> word;
  for (const auto& l : g.letters()) word.push_back(l.edge);
  return act_bounded_degree_word(model, word, h, h.graph.edges());
}

BoundedDegreeNetwork full_bounded_degree_action(const NetworkModel& model, const OperadOperation& op,
                                                const std::vector<BoundedDegreeNetwork>& states) {
  if (states.empty()) throw ContextError("bounded-degree action needs at least one state");
  std::vector<std::size_t> sizes;
  for (const auto& s : states) {
    if (s.k != states.front().k) throw ContextError("states have different degree bounds");
    sizes.push_back(s.graph.vertex_count());
  }
  check_profile(op, sizes);
  SimpleGraph placed(0);
  for (const auto& s : states) placed = graph_sum(placed, s.graph);
  auto h = make_bounded(states.front().k, permute_graph(op.sigma(), placed));
  return act_bounded_degree(model, op.network(), h);
}

}  // namespace netmod
