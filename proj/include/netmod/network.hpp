#pragma once

// Network models built from a monoid M of edge weights:
//  - NetworkModel: the varietal model whose n-th monoid is the Green product
//    of C(n,2) copies of M over KG(n,2), in Mon, CMon or GMon;
//  - OrdinaryModel: the product model M^{C(n,2)}.
// Both expose the same surface (unit, overlay, disjoint union, symmetric
// group action) so counit_eval can target either.

#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "netmod/green.hpp"
#include "netmod/kneser.hpp"
#include "netmod/permutation.hpp"

namespace netmod {

struct WeightedEdge {
  Edge edge;
  Element value;
};

/// An element of Gamma_{M,V}(n): a canonical Green word whose components
/// are the edges of the complete graph on n vertices.
class NetworkElement {
 public:
  NetworkElement(std::size_t n, GreenElement element) : n_(n), element_(std::move(element)) {}

  std::size_t vertex_count() const { return n_; }
  const GreenElement& element() const { return element_; }
  /// Letters of the canonical word as (edge, weight), in word order.
  std::vector<WeightedEdge> letters() const;

 private:
  std::size_t n_;
  GreenElement element_;
};

class NetworkModel {
 public:
  using value_type = NetworkElement;

  /// Throws ContextError if M is not in the variety.
  NetworkModel(Monoid edge_monoid, Variety variety, const LawCheckConfig& cfg = {});

  const Monoid& edge_monoid() const { return state_->edge_monoid; }
  Variety variety() const { return state_->variety; }
  std::string name() const;

  /// Green context over KG(n,2); built once per n and shared.
  ContextPtr context(std::size_t n) const;

  NetworkElement unit(std::size_t n) const;
  /// Single edge {u, v} with weight m.
  NetworkElement edge(std::size_t n, std::size_t u, std::size_t v, const Element& m) const;
  NetworkElement from_letters(std::size_t n, const std::vector<WeightedEdge>& word) const;
  /// Gamma(2) = M: the one-edge network on two vertices.
  NetworkElement from_edge_value(const Element& m) const { return edge(2, 0, 1, m); }

  NetworkElement overlay(const NetworkElement& g, const NetworkElement& h) const;
  NetworkElement disjoint(const NetworkElement& g, const NetworkElement& h) const;
  NetworkElement permute(const Permutation& sigma, const NetworkElement& g) const;
  bool equal(const NetworkElement& g, const NetworkElement& h) const;

  /// Edges carrying a non-identity weight somewhere in the word.
  SimpleGraph support(const NetworkElement& g) const;

 private:
  struct State {
    Monoid edge_monoid;
    Variety variety;
    LawCheckConfig cfg;
    mutable std::mutex mutex;
    mutable std::map<std::size_t, ContextPtr> contexts;
  };
  void require_mine(const NetworkElement& g) const;

  std::shared_ptr<State> state_;
};

/// Element of the ordinary model: one weight per edge, indexed by pair_index.
struct OrdinaryNetwork {
  std::size_t n = 0;
  std::vector<Element> weights;
};

class OrdinaryModel {
 public:
  using value_type = OrdinaryNetwork;

  explicit OrdinaryModel(Monoid edge_monoid) : m_(std::move(edge_monoid)) {}

  const Monoid& edge_monoid() const { return m_; }

  OrdinaryNetwork unit(std::size_t n) const;
  OrdinaryNetwork edge(std::size_t n, std::size_t u, std::size_t v, const Element& m) const;
  OrdinaryNetwork from_edge_value(const Element& m) const { return edge(2, 0, 1, m); }

  OrdinaryNetwork overlay(const OrdinaryNetwork& g, const OrdinaryNetwork& h) const;
  OrdinaryNetwork disjoint(const OrdinaryNetwork& g, const OrdinaryNetwork& h) const;
  OrdinaryNetwork permute(const Permutation& sigma, const OrdinaryNetwork& g) const;
  bool equal(const OrdinaryNetwork& g, const OrdinaryNetwork& h) const;

  SimpleGraph support(const OrdinaryNetwork& g) const;
  /// Every network on n vertices; only for finite M and small n.
  std::vector<OrdinaryNetwork> enumerate(std::size_t n) const;

 private:
  Monoid m_;
};

/// What counit_eval needs from a target network model.
template <typename F>
concept NetworkModelLike = requires(const F& f, const typename F::value_type& a, std::size_t n,
                                    const Permutation& s, const Element& m) {
  { f.unit(n) } -> std::same_as<typename F::value_type>;
  { f.overlay(a, a) } -> std::same_as<typename F::value_type>;
  { f.disjoint(a, a) } -> std::same_as<typename F::value_type>;
  { f.permute(s, a) } -> std::same_as<typename F::value_type>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.edge_monoid() } -> std::convertible_to<Monoid>;
  { f.from_edge_value(m) } -> std::same_as<typename F::value_type>;
};

/// Permutation of n points sending 0 -> i, 1 -> j and the remaining points,
/// in increasing order, onto the remaining points in increasing order.
Permutation edge_placement(std::size_t n, std::size_t i, std::size_t j);

/// The double transposition (0 i)(1 j), applied right to left.
Permutation double_transposition(std::size_t n, std::size_t i, std::size_t j);

/// F(place)(m + unit(n-2)): the one-edge network m moved along `place`.
template <NetworkModelLike F>
typename F::value_type place_edge(const F& target, const Element& m, const Permutation& place) {
  const auto n = place.size();
  return target.permute(place, target.disjoint(target.from_edge_value(m), target.unit(n - 2)));
}

/// c_{i,j}(m): the weight m put on edge {i, j} of an n-vertex network of F.
template <NetworkModelLike F>
typename F::value_type place_edge(const F& target, std::size_t n, std::size_t i, std::size_t j,
                                  const Element& m) {
  return place_edge(target, m, edge_placement(n, i, j));
}

/// Counit of the free/forgetful adjunction at F, evaluated on g in
/// Gamma_{F(2),V}(n): the letterwise fold of g through c_{i,j}.
/// Throws ContextError if F(2) is not the source's edge monoid or if
/// placements on disjoint edges fail to commute in F.
template <NetworkModelLike F>
typename F::value_type counit_eval(const F& target, const NetworkModel& source, const NetworkElement& g) {
  if (!(Monoid(target.edge_monoid()) == source.edge_monoid())) {
    throw ContextError("counit needs F(2) to be the edge monoid of the free model");
  }
  const auto n = g.vertex_count();
  if (n < 2) return target.unit(n);

  // Edge-cocone condition on witnesses.
  const auto& m = source.edge_monoid();
  auto witnesses = law_witnesses(m, 8, 0xc0c0ULL);
  const auto kg = kneser_graph(n, 2);
  for (const auto& [p, q] : kg.edges()) {
    auto e1 = pair_at(p);
    auto e2 = pair_at(q);
    for (const auto& a : witnesses) {
      auto x = place_edge(target, n, e1.first, e1.second, a);
      for (const auto& b : witnesses) {
        auto y = place_edge(target, n, e2.first, e2.second, b);
        if (!target.equal(target.overlay(x, y), target.overlay(y, x))) {
          throw ContextError("target is not a network model: disjoint edges do not commute");
        }
      }
    }
  }
  return universal_fold(
      g.element(),
      [&](std::size_t v, const Element& value) {
        auto e = pair_at(v);
        return place_edge(target, n, e.first, e.second, value);
      },
      target.unit(n), [&](const auto& x, const auto& y) { return target.overlay(x, y); });
}

/// f applied letterwise, Gamma_{M,V}(n) -> Gamma_{N,V}(n). Throws
/// ContextError if f is not a homomorphism or does not match the models.
NetworkElement induced_hom(const MonoidHom& f, const NetworkElement& g, const NetworkModel& target,
                           const LawCheckConfig& cfg = {});

/// Gamma_{M,CMon}(n) -> Gamma_M(n): combine the letters on each edge.
OrdinaryNetwork cmon_iso(const NetworkModel& model, const NetworkElement& g);
NetworkElement cmon_iso_inverse(const NetworkModel& model, const OrdinaryNetwork& g);

}  // namespace netmod
