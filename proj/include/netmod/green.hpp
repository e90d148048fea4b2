#pragma once

// Green (graph) products of monoids, optionally quotiented into the
// commutative or graphic variety, held in a canonical normal form.

#include <memory>
#include <vector>

#include "netmod/algebra.hpp"
#include "netmod/errors.hpp"
#include "netmod/graph.hpp"

namespace netmod {

/// m^v: an element of the monoid sitting at vertex v of the index graph.
struct Letter {
  std::size_t component = 0;
  Element value;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Index graph with one monoid per vertex, plus the variety of the product.
class GreenContext {
 public:
  /// Validates the variety against every component: CMon needs commutative
  /// components, GMon needs finite graphic ones. Throws ContextError.
  static std::shared_ptr<const GreenContext> make(SimpleGraph graph, std::vector<Monoid> components,
                                                  Variety variety, const LawCheckConfig& cfg = {});
  /// Same monoid at every vertex.
  static std::shared_ptr<const GreenContext> uniform(SimpleGraph graph, const Monoid& m,
                                                     Variety variety, const LawCheckConfig& cfg = {});

  const SimpleGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.vertex_count(); }
  const Monoid& component(std::size_t v) const { return components_[v]; }
  const std::vector<Monoid>& components() const { return components_; }
  Variety variety() const { return variety_; }

  bool commute(std::size_t u, std::size_t v) const { return graph_.adjacent(u, v); }

  /// Letter order: component index, then the component's element order.
  int compare(const Letter& a, const Letter& b) const;
  bool letter_eq(const Letter& a, const Letter& b) const {
    return a.component == b.component && components_[a.component].eq(a.value, b.value);
  }

  friend bool operator==(const GreenContext& a, const GreenContext& b);

 private:
  GreenContext(SimpleGraph g, std::vector<Monoid> c, Variety v)
      : graph_(std::move(g)), components_(std::move(c)), variety_(v) {}

  SimpleGraph graph_;
  std::vector<Monoid> components_;
  Variety variety_;
};

using ContextPtr = std::shared_ptr<const GreenContext>;

/// An element of a Green product, always stored in canonical form.
class GreenElement {
 public:
  const Word& word() const { return word_; }
  const GreenContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

 private:
  friend GreenElement normalize(const Word&, const ContextPtr&);
  GreenElement(ContextPtr ctx, Word w) : ctx_(std::move(ctx)), word_(std::move(w)) {}

  ContextPtr ctx_;
  Word word_;
};

/// Canonical form of a raw word: the reduced word (after the variety's
/// rewrites) that is lexicographically least in its shuffle class.
/// Throws ContextError for unknown components or foreign values.
GreenElement normalize(const Word& raw, const ContextPtr& ctx);

GreenElement green_identity(const ContextPtr& ctx);
GreenElement green_letter(const ContextPtr& ctx, std::size_t component, const Element& value);

GreenElement multiply(const GreenElement& x, const GreenElement& y);
bool equal(const GreenElement& x, const GreenElement& y);

/// Relabels components along a graph automorphism and renormalizes.
/// Throws ContextError if `perm` is not an automorphism of the index graph
/// or moves a letter onto a different monoid.
GreenElement aut_action(const std::vector<std::size_t>& perm, const GreenElement& x);

bool is_automorphism(const SimpleGraph& g, const std::vector<std::size_t>& perm);

// Pieces of the normalizer, exposed for testing.

/// Merges letters to a fixpoint; the result is a reduced word.
Word reduce_word(Word w, const GreenContext& ctx);
bool is_reduced(const Word& w, const GreenContext& ctx);
/// Least member of the shuffle class of a reduced word.
Word least_shuffle(Word w, const GreenContext& ctx);

/// Evaluates x in a target monoid via letterwise maps: returns
/// map(v1, m1) * ... * map(vk, mk). Well defined whenever the images of
/// adjacent components commute.
template <typename T, typename Map, typename Op>
T universal_fold(const GreenElement& x, Map&& map, T unit, Op&& op) {
  T acc = std::move(unit);
  for (const auto& l : x.word()) acc = op(acc, map(l.component, l.value));
  return acc;
}

/// Checks the edge-cocone condition: for every edge {u, v} of the index
/// graph the images of M_u and M_v commute in `target` (exhaustive on
/// finite components, sampled otherwise).
bool fold_compatible(const GreenContext& ctx, const std::vector<MonoidHom>& maps,
                     const Monoid& target, const LawCheckConfig& cfg = {});

/// The induced homomorphism out of the Green product. Throws ContextError
/// if the maps do not match the components or are not compatible.
Element universal_fold(const GreenElement& x, const std::vector<MonoidHom>& maps,
                       const Monoid& target, const LawCheckConfig& cfg = {});

}  // namespace netmod
