#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace netmod {

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

inline Edge make_edge(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Loopless undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  bool has_edge(const Edge& e) const { return adjacent(e.first, e.second); }
  std::size_t degree(std::size_t v) const;

  /// Adds {u, v}; no-op if present. Throws std::invalid_argument for loops.
  void add_edge(std::size_t u, std::size_t v);

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<char> adj_;
  std::vector<Edge> edges_;
};

SimpleGraph complete_graph(std::size_t n);

/// Left summand keeps its labels, right summand is shifted by a.vertex_count().
SimpleGraph graph_sum(const SimpleGraph& a, const SimpleGraph& b);

/// Length of a shortest cycle, 0 for forests.
std::size_t girth(const SimpleGraph& g);

/// Vertex map between simple graphs.
struct GraphMap {
  SimpleGraph source;
  SimpleGraph target;
  std::vector<std::size_t> vertex_map;

  /// True if every edge lands on an edge.
  bool preserves_edges() const;
  bool injective() const;
  /// True if image vertices are adjacent only when their preimages are.
  bool reflects_edges() const;
};

/// Directed multigraph: arrows are (source, target) pairs.
struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

/// Replaces every edge e = {u, v} by a cospan u -> e <- v. Objects are the
/// graph's vertices followed by its edges in sorted order.
Quiver insert_cospan(const SimpleGraph& g);

}  // namespace netmod
