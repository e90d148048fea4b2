#pragma once

// Operations of the network operad of a network model and two of its
// algebras: range-limited communication networks and bounded-degree
// networks.

#include <memory>
#include <vector>

#include "netmod/network.hpp"

namespace netmod {

/// (sigma, g) with arity profile (n_1, ..., n_k; n), n = sum n_i.
class OperadOperation {
 public:
  /// Throws ContextError unless the profile sums to the network's size and
  /// sigma acts on that many points.
  OperadOperation(std::vector<std::size_t> profile, Permutation sigma, NetworkElement g);

  /// (id, empty network) with profile (n; n).
  static OperadOperation identity(const NetworkModel& model, std::size_t n);

  const std::vector<std::size_t>& profile() const { return profile_; }
  std::size_t arity() const { return profile_.size(); }
  std::size_t output_size() const { return g_.vertex_count(); }
  const Permutation& sigma() const { return sigma_; }
  const NetworkElement& network() const { return g_; }

 private:
  std::vector<std::size_t> profile_;
  Permutation sigma_;
  NetworkElement g_;
};

/// (sigma, g) o ((tau_1, h_1), ..., (tau_k, h_k))
///   = (sigma (tau_1 + ... + tau_k), g u sigma(h_1 + ... + h_k)).
/// Throws ContextError if the inner outputs do not match the outer profile.
OperadOperation operad_compose(const NetworkModel& model, const OperadOperation& outer,
                               const std::vector<OperadOperation>& inners);

bool operations_equal(const NetworkModel& model, const OperadOperation& a, const OperadOperation& b);

// Simple-graph helpers.

/// Number of edges at v. Throws std::out_of_range for v >= n.
std::size_t degree(const SimpleGraph& h, std::size_t v);
bool is_k_bounded(const SimpleGraph& h, std::size_t k);
/// Vertex v of h becomes sigma(v).
SimpleGraph permute_graph(const Permutation& sigma, const SimpleGraph& h);
SimpleGraph graph_union(const SimpleGraph& a, const SimpleGraph& b);

// ---------------------------------------------------------------------------
// Range-limited communication.

using Point = std::vector<double>;

/// A metric space: the Euclidean line or plane, or a finite space given by
/// a distance matrix (points are {index}).
class MetricSpace {
 public:
  enum class Kind { Line, Plane, Finite };

  static MetricSpace line() { return MetricSpace(Kind::Line, {}); }
  static MetricSpace plane() { return MetricSpace(Kind::Plane, {}); }
  /// Throws ContextError unless the matrix is square, zero exactly on the
  /// diagonal, symmetric and satisfies the triangle inequality.
  static MetricSpace finite(std::vector<std::vector<double>> distances);

  Kind kind() const { return kind_; }
  bool contains(const Point& p) const;
  /// Throws ContextError for points outside the space.
  double distance(const Point& a, const Point& b) const;

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  MetricSpace(Kind kind, std::vector<std::vector<double>> d) : kind_(kind), d_(std::move(d)) {}

  Kind kind_;
  std::vector<std::vector<double>> d_;
};

/// The space and range limit L shared by all states of one algebra.
struct RangeLimit {
  MetricSpace space;
  double limit = 0.0;
};

/// (h, f): a simple graph with vertex positions, every edge of length <= L.
struct RangeLimitedState {
  std::shared_ptr<const RangeLimit> range;
  SimpleGraph graph;
  std::vector<Point> positions;
};

/// Throws ContextError if a position is outside the space or an edge is
/// longer than the limit.
RangeLimitedState make_range_state(std::shared_ptr<const RangeLimit> range, SimpleGraph graph,
                                   std::vector<Point> positions);

bool satisfies_range(const RangeLimitedState& s);

/// alpha(sigma, g)((h_1, f_1), ..., (h_k, f_k)): the states are placed side
/// by side and relabelled by sigma (positions travel with their vertices),
/// then every edge of g within range is added. Edges of g longer than L are
/// dropped.
RangeLimitedState act_range_limited(const OperadOperation& op, const NetworkModel& model,
                                    const std::vector<RangeLimitedState>& states);

// ---------------------------------------------------------------------------
// Bounded-degree networks, acted on by Gamma_{B,GMon}.

struct BoundedDegreeNetwork {
  std::size_t k = 0;
  SimpleGraph graph;
};

/// Throws ContextError if some vertex has degree above k.
BoundedDegreeNetwork make_bounded(std::size_t k, SimpleGraph graph);

/// h acted on by g: walk the canonical word of g, keeping each edge whose
/// addition leaves the support k-bounded. `model` must be Gamma_{B,GMon}.
BoundedDegreeNetwork act_bounded_degree(const NetworkModel& model, const NetworkElement& g,
                                        const BoundedDegreeNetwork& h);

/// The same procedure on an arbitrary representative word of g, starting
/// from the lift h' of h whose letters are h's edges in `lift_order`.
BoundedDegreeNetwork act_bounded_degree_word(const NetworkModel& model, const std::vector<Edge>& word,
                                             const BoundedDegreeNetwork& h,
                                             const std::vector<Edge>& lift_order);

/// Places the states side by side, relabels by sigma, then acts by g.
BoundedDegreeNetwork full_bounded_degree_action(const NetworkModel& model, const OperadOperation& op,
                                                const std::vector<BoundedDegreeNetwork>& states);

}  // namespace netmod
