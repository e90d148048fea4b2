#include "netmod/green.hpp"

#include <algorithm>
#include <string>

namespace netmod {

std::shared_ptr<const GreenContext> GreenContext::make(SimpleGraph graph, std::vector<Monoid> components,
                                                       Variety variety, const LawCheckConfig& cfg) {
  if (components.size() != graph.vertex_count()) {
    throw ContextError("need one component monoid per index-graph vertex");
  }
  for (const auto& m : components) {
    if (variety == Variety::GMon && !m.is_finite()) {
      throw ContextError("gmon products need finite component monoids, got " + m.name());
    }
    if (!satisfies_variety(m, variety, cfg)) {
      throw ContextError(m.name() + " does not lie in variety " + to_string(variety));
    }
  }
  return std::shared_ptr<const GreenContext>(
      new GreenContext(std::move(graph), std::move(components), variety));
}

std::shared_ptr<const GreenContext> GreenContext::uniform(SimpleGraph graph, const Monoid& m,
                                                          Variety variety, const LawCheckConfig& cfg) {
  // Check the variety once rather than per vertex.
  if (variety == Variety::GMon && !m.is_finite()) {
    throw ContextError("gmon products need finite component monoids, got " + m.name());
  }
  if (!satisfies_variety(m, variety, cfg)) {
    throw ContextError(m.name() + " does not lie in variety " + to_string(variety));
  }
  std::vector<Monoid> comps(graph.vertex_count(), m);
  return std::shared_ptr<const GreenContext>(new GreenContext(std::move(graph), std::move(comps), variety));
}

int GreenContext::compare(const Letter& a, const Letter& b) const {
  if (a.component != b.component) return a.component < b.component ? -1 : 1;
  return components_[a.component].compare(a.value, b.value);
}

bool operator==(const GreenContext& a, const GreenContext& b) {
  if (&a == &b) return true;
  return a.variety_ == b.variety_ && a.graph_ == b.graph_ && a.components_ == b.components_;
}

namespace {

void require_same(const GreenContext& a, const GreenContext& b) {
  if (!(a == b)) throw ContextError("Green elements live in different contexts");
}

// Position of the first later letter of the same component that can be
// brought next to position i through commuting letters, or npos.
std::size_t partner(const Word& w, std::size_t i, const GreenContext& ctx) {
  const auto c = w[i].component;
  for (std::size_t j = i + 1; j < w.size(); ++j) {
    if (w[j].component == c) return j;
    if (!ctx.commute(w[j].component, c)) break;
  }
  return std::string::npos;
}

// Combines one mergeable pair. Returns false if the word is reduced.
bool merge_once(Word& w, const GreenContext& ctx) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto j = partner(w, i, ctx);
    if (j == std::string::npos) continue;
    const auto& m = ctx.component(w[i].component);
    w[i].value = m.op(w[i].value, w[j].value);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
    if (m.is_identity(w[i].value)) w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }
  return false;
}

// Graphic rule. Let s be the product of the earlier letters of the same
// component. The whole prefix P satisfies P s = P, so P m = P (s m) and m
// may be replaced by any m' with s m' = s m; we take the least one, and
// drop the letter when s m = s.
bool graphic_pass(Word& w, const GreenContext& ctx) {
  bool changed = false;
  for (std::size_t j = 0; j < w.size();) {
    const auto c = w[j].component;
    const auto& m = ctx.component(c);
    bool seen = false;
    Element s = m.identity();
    for (std::size_t i = 0; i < j; ++i) {
      if (w[i].component != c) continue;
      s = seen ? m.op(s, w[i].value) : w[i].value;
      seen = true;
    }
    if (!seen) {
      ++j;
      continue;
    }
    const auto target = m.op(s, w[j].value);
    if (m.eq(target, s)) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      changed = true;
      continue;
    }
    const auto candidates = m.elements().value();
    for (const auto& cand : candidates) {
      if (m.eq(m.op(s, cand), target)) {
        if (!m.eq(cand, w[j].value)) {
          w[j].value = cand;
          changed = true;
        }
        break;
      }
    }
    ++j;
  }
  return changed;
}

// Commutative variety: the product is the direct product of components.
Word commutative_form(const Word& w, const GreenContext& ctx) {
  std::vector<std::optional<Element>> acc(ctx.size());
  for (const auto& l : w) {
    const auto& m = ctx.component(l.component);
    acc[l.component] = acc[l.component] ? m.op(*acc[l.component], l.value) : l.value;
  }
  Word out;
  for (std::size_t v = 0; v < acc.size(); ++v) {
    if (acc[v] && !ctx.component(v).is_identity(*acc[v])) out.push_back({v, *acc[v]});
  }
  return out;
}

}  // namespace

Word reduce_word(Word w, const GreenContext& ctx) {
  while (merge_once(w, ctx)) {
  }
  return w;
}

bool is_reduced(const Word& w, const GreenContext& ctx) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (partner(w, i, ctx) != std::string::npos) return false;
  return true;
}

Word least_shuffle(Word w, const GreenContext& ctx) {
  // Greedy: repeatedly move the least letter that commutes with everything
  // before it to the front. In a reduced word two such letters never share
  // a component, so the choice is unique.
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) {
        movable = w[j].component != w[i].component && ctx.commute(w[j].component, w[i].component);
      }
      if (!movable) {
        continue;
      }
      if (ctx.compare(w[i], w[best]) < 0) best = i;
    }
    out.push_back(std::move(w[best]));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

GreenElement normalize(const Word& raw, const ContextPtr& ctx) {
  Word w;
  w.reserve(raw.size());
  for (const auto& l : raw) {
    if (l.component >= ctx->size()) {
      throw ContextError("component " + std::to_string(l.component) + " is not a vertex of the index graph");
    }
    const auto& m = ctx->component(l.component);
    if (!m.contains(l.value)) {
      throw ContextError("value is not an element of component monoid " + m.name());
    }
    if (!m.is_identity(l.value)) w.push_back(l);
  }

  switch (ctx->variety()) {
    case Variety::CMon:
      return GreenElement(ctx, commutative_form(w, *ctx));
    case Variety::Mon:
      w = reduce_word(std::move(w), *ctx);
      break;
    case Variety::GMon: {
      bool changed = true;
      while (changed) {
        w = reduce_word(std::move(w), *ctx);
        changed = graphic_pass(w, *ctx);
      }
      break;
    }
  }
  return GreenElement(ctx, least_shuffle(std::move(w), *ctx));
}

GreenElement green_identity(const ContextPtr& ctx) { return normalize({}, ctx); }

GreenElement green_letter(const ContextPtr& ctx, std::size_t component, const Element& value) {
  return normalize({Letter{component, value}}, ctx);
}

GreenElement multiply(const GreenElement& x, const GreenElement& y) {
  require_same(x.context(), y.context());
  Word w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return normalize(w, x.context_ptr());
}

bool equal(const GreenElement& x, const GreenElement& y) {
  require_same(x.context(), y.context());
  const auto& a = x.word();
  const auto& b = y.word();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!x.context().letter_eq(a[i], b[i])) return false;
  return true;
}

bool is_automorphism(const SimpleGraph& g, const std::vector<std::size_t>& perm) {
  const auto n = g.vertex_count();
  if (perm.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.adjacent(perm[e.first], perm[e.second]); });
}

GreenElement aut_action(const std::vector<std::size_t>& perm, const GreenElement& x) {
  const auto& ctx = x.context();
  if (!is_automorphism(ctx.graph(), perm)) {
    throw ContextError("permutation is not an automorphism of the index graph");
  }
  Word w;
  w.reserve(x.length());
  for (const auto& l : x.word()) {
    if (!(ctx.component(perm[l.component]) == ctx.component(l.component))) {
      throw ContextError("automorphism moves a letter onto a different monoid");
    }
    w.push_back({perm[l.component], l.value});
  }
  return normalize(w, x.context_ptr());
}

bool fold_compatible(const GreenContext& ctx, const std::vector<MonoidHom>& maps, const Monoid& target,
                     const LawCheckConfig& cfg) {
  if (maps.size() != ctx.size()) return false;
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    if (!(maps[v].source == ctx.component(v)) || !(maps[v].target == target)) return false;
  }
  constexpr std::size_t kWitnesses = 32;
  for (const auto& [u, v] : ctx.graph().edges()) {
    auto as = law_witnesses(ctx.component(u), kWitnesses, cfg.seed + u);
    auto bs = law_witnesses(ctx.component(v), kWitnesses, cfg.seed + v);
    for (const auto& a : as) {
      auto fa = maps[u](a);
      for (const auto& b : bs) {
        auto fb = maps[v](b);
        if (!target.eq(target.op(fa, fb), target.op(fb, fa))) return false;
      }
    }
  }
  return true;
}

Element universal_fold(const GreenElement& x, const std::vector<MonoidHom>& maps, const Monoid& target,
                       const LawCheckConfig& cfg) {
  if (!fold_compatible(x.context(), maps, target, cfg)) {
    throw ContextError("vertex maps do not form a cocone over the index graph");
  }
  return universal_fold(
      x, [&](std::size_t v, const Element& m) { return maps[v](m); }, target.identity(),
      [&](const Element& a, const Element& b) { return target.op(a, b); });
}

}  // namespace netmod
