#include <doctest.h>

#include <algorithm>
#include <set>

#include "netmod/errors.hpp"
#include "netmod/green.hpp"
#include "netmod/kneser.hpp"
#include "netmod/oracle.hpp"

using namespace netmod;

namespace {

const Monoid B = boolean_monoid();
const Element T = B.parse("T");
const Element F = B.parse("F");

Letter edge_letter(std::size_t u, std::size_t v, const Element& m = T) { return {pair_index(u, v), m}; }

bool contains_word(const std::vector<Word>& ws, const Word& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

}  // namespace

TEST_CASE("insert_cospan counts") {
  const SimpleGraph g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  auto q = insert_cospan(g);
  CHECK(q.vertex_count == 8);
  CHECK(q.arrows.size() == 8);
  for (const auto& [s, t] : q.arrows) {
    CHECK(s < 4);
    CHECK(t >= 4);
  }
  CHECK(insert_cospan(SimpleGraph(5)).vertex_count == 5);
  CHECK(insert_cospan(SimpleGraph(5)).arrows.empty());
  auto tri = insert_cospan(complete_graph(3));
  CHECK(tri.vertex_count == 6);
  CHECK(tri.arrows.size() == 6);
}

TEST_CASE("normalize over KG(4,2)") {
  auto ctx = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  auto x = normalize({edge_letter(0, 1), edge_letter(2, 3)}, ctx);
  auto y = normalize({edge_letter(2, 3), edge_letter(0, 1)}, ctx);
  CHECK(x.word() == y.word());
  CHECK(equal(x, y));
  CHECK(x.length() == 2);
  CHECK(normalize({edge_letter(0, 1, F)}, ctx).is_identity());
  CHECK_THROWS_AS(normalize({{6, T}}, ctx), ContextError);
  CHECK_THROWS_AS(normalize({{0, Element(std::int64_t{7})}}, ctx), ContextError);
}

TEST_CASE("edgeless index graph keeps alternating words") {
  auto ctx = GreenContext::uniform(SimpleGraph(2), B, Variety::Mon);
  const Word aba{{0, T}, {1, T}, {0, T}};
  CHECK(normalize(aba, ctx).length() == 3);
  CHECK(shuffle_closure_oracle(aba, *ctx).size() == 1);
}

TEST_CASE("multiply") {
  auto kg4 = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  auto m1 = green_letter(kg4, pair_index(0, 1), T);
  auto m2 = green_letter(kg4, pair_index(2, 3), T);
  CHECK(equal(multiply(m1, green_identity(kg4)), m1));
  CHECK(equal(multiply(m1, m2), multiply(m2, m1)));

  auto kg3 = GreenContext::uniform(kneser_graph(3, 2), B, Variety::Mon);
  const Word xy{edge_letter(0, 1), edge_letter(0, 2)};
  const Word yx{edge_letter(0, 2), edge_letter(0, 1)};
  auto a = normalize(xy, kg3);
  auto b = normalize(yx, kg3);
  CHECK_FALSE(equal(a, b));
  CHECK_FALSE(oracle_equal_mon(xy, yx, *kg3));

  auto other = GreenContext::uniform(kneser_graph(3, 2), B, Variety::GMon);
  CHECK_THROWS_AS(multiply(a, green_identity(other)), ContextError);
}

TEST_CASE("one-vertex product collapses repeated letters") {
  auto ctx = GreenContext::uniform(SimpleGraph(1), B, Variety::Mon);
  const Word abab{{0, T}, {0, T}, {0, T}, {0, T}};
  auto x = normalize(abab, ctx);
  CHECK(equal(x, normalize({{0, T}}, ctx)));
  CHECK(x.length() == 1);
}

TEST_CASE("shuffle closure oracle") {
  auto two = GreenContext::uniform(complete_graph(2), B, Variety::Mon);
  CHECK(shuffle_closure_oracle({{0, T}, {1, T}}, *two).size() == 2);
  auto apart = GreenContext::uniform(SimpleGraph(2), B, Variety::Mon);
  CHECK(shuffle_closure_oracle({{0, T}, {1, T}}, *apart).size() == 1);

  // Over KG(4,2) only the first two letters of 12 * 34 * 13 commute.
  auto kg4 = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  const Word w{edge_letter(0, 1), edge_letter(2, 3), edge_letter(0, 2)};
  auto cls = shuffle_closure_oracle(w, *kg4);
  CHECK(cls.size() == 2);
  CHECK(contains_word(cls, w));
  CHECK(contains_word(cls, Word{edge_letter(2, 3), edge_letter(0, 1), edge_letter(0, 2)}));
}

TEST_CASE("congruence closure oracle") {
  const auto M = path_band_monoid();
  auto ctx = GreenContext::uniform(SimpleGraph(2), M, Variety::GMon);
  const Letter x{0, M.parse("a")};
  const Letter w{1, M.parse("b")};
  auto cls = congruence_closure_oracle({x, w, x}, *ctx, Variety::GMon, 3);
  CHECK(contains_word(cls, Word{x, w}));

  auto cctx = GreenContext::uniform(SimpleGraph(2), B, Variety::CMon);
  auto ccls = congruence_closure_oracle({{0, T}, {1, T}}, *cctx, Variety::CMon, 2);
  CHECK(contains_word(ccls, Word{{1, T}, {0, T}}));

  auto mctx = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  const Word mw{edge_letter(0, 1), edge_letter(2, 3), edge_letter(0, 2)};
  auto a = congruence_closure_oracle(mw, *mctx, Variety::Mon, 3);
  auto b = shuffle_closure_oracle(mw, *mctx);
  CHECK(a.size() == b.size());
  for (const auto& v : b) CHECK(contains_word(a, v));
}

TEST_CASE("universal fold onto the direct product") {
  auto ctx = GreenContext::uniform(complete_graph(2), B, Variety::Mon);
  auto dp = direct_product(B, B);
  const std::vector<MonoidHom> maps{dp.inl, dp.inr};
  CHECK(dp.product.is_identity(universal_fold(green_identity(ctx), maps, dp.product)));
  const auto els = *B.elements();
  for (const auto& m : els)
    for (const auto& n : els) {
      auto x = normalize({{0, m}, {1, n}}, ctx);
      auto folded = universal_fold(x, maps, dp.product);
      CHECK(dp.product.eq(folded, Element(Element::Tuple{m, n})));
    }

  // Every member of an oracle class folds to the same value.
  auto kg4 = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  std::vector<MonoidHom> free_maps;
  const auto W = free_monoid("abcdef");
  for (std::size_t v = 0; v < 6; ++v) {
    const std::string letter(1, static_cast<char>('a' + v));
    free_maps.push_back({B, W, [W, letter](const Element& e) {
                           return W.parse(e == boolean_monoid().parse("T") ? letter : "");
                         }});
  }
  // Free targets do not commute, so only the edgeless graph is compatible.
  CHECK_FALSE(fold_compatible(*kg4, free_maps, W));
  auto kg3 = GreenContext::uniform(kneser_graph(3, 2), B, Variety::Mon);
  free_maps.resize(3);
  CHECK(fold_compatible(*kg3, free_maps, W));
  const Word w{edge_letter(0, 1), edge_letter(0, 2), edge_letter(0, 1)};
  auto folded = universal_fold(normalize(w, kg3), free_maps, W);
  CHECK(W.format(folded) == "\"aba\"");
}

TEST_CASE("aut_action") {
  auto ctx = GreenContext::uniform(SimpleGraph(3), B, Variety::Mon);
  auto x = normalize({{0, T}}, ctx);
  CHECK(equal(aut_action({0, 1, 2}, x), x));
  auto moved = aut_action({1, 0, 2}, x);
  REQUIRE(moved.length() == 1);
  CHECK(moved.word()[0].component == 1);

  auto path = GreenContext::uniform(SimpleGraph(3, {{0, 1}}), B, Variety::Mon);
  CHECK_THROWS_AS(aut_action({0, 2, 1}, normalize({}, path)), ContextError);

  auto kg4 = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  const std::vector<std::size_t> swap{5, 4, 3, 2, 1, 0};
  REQUIRE(is_automorphism(kg4->graph(), swap));
  auto a = normalize({edge_letter(0, 1), edge_letter(0, 2)}, kg4);
  auto b = normalize({edge_letter(1, 3), edge_letter(2, 3), edge_letter(0, 1)}, kg4);
  CHECK(equal(aut_action(swap, multiply(a, b)), multiply(aut_action(swap, a), aut_action(swap, b))));
}

TEST_CASE("canonical words are reduced and lexicographically least") {
  auto ctx = GreenContext::uniform(kneser_graph(4, 2), B, Variety::Mon);
  OracleAlphabet al(*ctx);
  for (const auto& code : all_code_words(al, 3)) {
    auto x = normalize(al.decode(code), ctx);
    CHECK(is_reduced(x.word(), *ctx));
    CHECK(equal(normalize(x.word(), ctx), x));
    for (const auto& v : shuffle_closure_oracle(x.word(), *ctx)) {
      if (v.size() != x.length()) continue;
      CHECK_FALSE(std::lexicographical_compare(v.begin(), v.end(), x.word().begin(), x.word().end(),
                                               [&](const Letter& p, const Letter& q) { return ctx->compare(p, q) < 0; }));
    }
  }
}

TEST_CASE("edgeless B + B has 2L + 1 short elements") {
  auto ctx = GreenContext::uniform(SimpleGraph(2), B, Variety::Mon);
  OracleAlphabet al(*ctx);
  for (std::size_t L = 0; L <= 6; ++L) {
    std::set<std::string> keys;
    for (const auto& w : all_code_words(al, L)) keys.insert(al.encode(normalize(al.decode(w), ctx).word()));
    CHECK(keys.size() == 2 * L + 1);
  }
}

TEST_CASE("variety validation of contexts") {
  CHECK_THROWS_AS(GreenContext::uniform(SimpleGraph(2), path_band_monoid(), Variety::CMon), ContextError);
  CHECK_THROWS_AS(GreenContext::uniform(SimpleGraph(2), nat_monoid(), Variety::GMon), ContextError);
  CHECK_NOTHROW(GreenContext::uniform(SimpleGraph(2), nat_monoid(), Variety::CMon));
}

TEST_CASE("GMon removes a repeated letter after its first occurrence") {
  auto ctx = GreenContext::uniform(SimpleGraph(2), B, Variety::GMon);
  auto x = normalize({{0, T}, {1, T}, {0, T}}, ctx);
  CHECK(equal(x, normalize({{0, T}, {1, T}}, ctx)));
  CHECK(oracle_equal({{0, T}, {1, T}, {0, T}}, {{0, T}, {1, T}}, *ctx, Variety::GMon, 3));
}
