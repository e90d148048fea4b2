#include "netmod/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace netmod {

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adjacent(u, v) ? 1 : 0;
  return d;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("simple graphs have no loops");
  if (adjacent(u, v)) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  auto e = make_edge(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

SimpleGraph graph_sum(const SimpleGraph& a, const SimpleGraph& b) {
  const auto m = a.vertex_count();
  SimpleGraph g(m + b.vertex_count());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(u + m, v + m);
  return g;
}

std::size_t girth(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> parent(n, n);
    std::queue<std::size_t> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

bool GraphMap::preserves_edges() const {
  return std::all_of(source.edges().begin(), source.edges().end(), [&](const Edge& e) {
    auto u = vertex_map[e.first], v = vertex_map[e.second];
    return u != v && target.adjacent(u, v);
  });
}

bool GraphMap::injective() const {
  std::set<std::size_t> image(vertex_map.begin(), vertex_map.end());
  return image.size() == vertex_map.size();
}

bool GraphMap::reflects_edges() const {
  const auto n = source.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (vertex_map[u] != vertex_map[v] && target.adjacent(vertex_map[u], vertex_map[v]) &&
          !source.adjacent(u, v))
        return false;
  return true;
}

Quiver insert_cospan(const SimpleGraph& g) {
  Quiver q;
  q.vertex_count = g.vertex_count() + g.edge_count();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edges()[i];
    q.arrows.emplace_back(u, g.vertex_count() + i);
    q.arrows.emplace_back(v, g.vertex_count() + i);
  }
  return q;
}

}  // namespace netmod
