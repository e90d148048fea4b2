#pragma once

// Kneser graphs KG(n, k) and the maps induced by injections of finite sets.

#include <cstddef>
#include <vector>

#include "netmod/graph.hpp"

namespace netmod {

/// Injective function {0..m-1} -> {0..n-1}.
class Injection {
 public:
  /// Throws std::invalid_argument unless `map` is injective into {0..n-1}.
  Injection(std::size_t codomain_size, std::vector<std::size_t> map);

  static Injection identity(std::size_t n);
  /// {0..m-1} -> {0..n-1}, i -> i.
  static Injection inclusion(std::size_t m, std::size_t n);

  std::size_t domain_size() const { return map_.size(); }
  std::size_t codomain_size() const { return n_; }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& map() const { return map_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> map_;
};

/// g after f.
Injection compose(const Injection& g, const Injection& f);

/// Sorted list of k distinct elements.
using KSubset = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1} in colex order; empty when k > n.
std::vector<KSubset> k_subsets(std::size_t n, std::size_t k);

/// Position of a sorted subset in colex order (independent of n).
std::size_t colex_rank(const KSubset& s);

/// Vertices are k_subsets(n, k); disjoint subsets are adjacent.
SimpleGraph kneser_graph(std::size_t n, std::size_t k);

/// U -> f[U], as a map on colex indices of KG(m, k) -> KG(n, k).
std::vector<std::size_t> subsets_map(const Injection& f, std::size_t k);

/// The graph map KG(m, k) -> KG(n, k) induced by f.
GraphMap kneser_embedding(const Injection& f, std::size_t k);

/// KG(m, k) + KG(n, k) -> KG(m + n, k): left subsets unchanged, right
/// subsets shifted by m.
GraphMap kneser_laxator(std::size_t m, std::size_t n, std::size_t k);

/// Index of the edge {u, v} of the complete graph on n vertices as a
/// vertex of KG(n, 2).
inline std::size_t pair_index(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

/// Inverse of pair_index.
Edge pair_at(std::size_t index);

}  // namespace netmod
