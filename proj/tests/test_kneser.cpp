#include <doctest.h>

#include <set>
#include <stdexcept>

#include "netmod/kneser.hpp"

using namespace netmod;

namespace {

std::set<std::size_t> as_set(const KSubset& s) { return {s.begin(), s.end()}; }

bool disjoint(const KSubset& a, const KSubset& b) {
  for (auto x : a)
    for (auto y : b)
      if (x == y) return false;
  return true;
}

}  // namespace

TEST_CASE("k-subsets in colex order") {
  CHECK(k_subsets(4, 2).size() == 6);
  CHECK(k_subsets(5, 2).size() == 10);
  CHECK(k_subsets(3, 0).size() == 1);
  CHECK(k_subsets(3, 0)[0].empty());
  CHECK(k_subsets(2, 3).empty());
  const std::vector<KSubset> expect{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(k_subsets(4, 2) == expect);
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(colex_rank(expect[i]) == i);
    CHECK(pair_index(expect[i][0], expect[i][1]) == i);
    CHECK(pair_at(i) == Edge{expect[i][0], expect[i][1]});
  }
}

TEST_CASE("KG(4,2) is a perfect matching") {
  auto g = kneser_graph(4, 2);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(make_edge(pair_index(0, 1), pair_index(2, 3))));
  CHECK(g.has_edge(make_edge(pair_index(0, 2), pair_index(1, 3))));
  CHECK(g.has_edge(make_edge(pair_index(0, 3), pair_index(1, 2))));
}

TEST_CASE("KG(3,2) and KG(5,2)") {
  CHECK(kneser_graph(3, 2).vertex_count() == 3);
  CHECK(kneser_graph(3, 2).edge_count() == 0);
  auto p = kneser_graph(5, 2);
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (std::size_t v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(girth(p) == 5);
}

TEST_CASE("Kneser edge counts match disjointness") {
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= 3 && k <= n; ++k) {
      auto g = kneser_graph(n, k);
      auto subsets = k_subsets(n, k);
      std::size_t edges = 0;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
          const bool d = disjoint(subsets[i], subsets[j]);
          CHECK(g.adjacent(i, j) == d);
          edges += d;
        }
      CHECK(g.vertex_count() == binomial(n, k));
      CHECK(g.edge_count() == edges);
      if (k > 0) CHECK(2 * g.edge_count() == binomial(n, k) * binomial(n - k, k));
    }
}

TEST_CASE("subsets_map") {
  auto id = subsets_map(Injection::identity(4), 2);
  for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == i);
  Injection f(4, {3, 1});
  auto m = subsets_map(f, 2);
  REQUIRE(m.size() == 1);
  CHECK(k_subsets(4, 2)[m[0]] == KSubset{1, 3});

  Injection g(5, {4, 0, 2, 1});
  Injection h(4, {2, 0, 3});
  auto gh = subsets_map(compose(g, h), 2);
  auto sg = subsets_map(g, 2), sh = subsets_map(h, 2);
  for (std::size_t i = 0; i < gh.size(); ++i) CHECK(gh[i] == sg[sh[i]]);
  CHECK_THROWS_AS(Injection(3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Injection(3, {3}), std::invalid_argument);
}

TEST_CASE("kneser embeddings preserve and reflect edges") {
  auto id = kneser_embedding(Injection::identity(4), 2);
  CHECK(id.preserves_edges());
  for (std::size_t i = 0; i < 6; ++i) CHECK(id.vertex_map[i] == i);
  auto inc = kneser_embedding(Injection::inclusion(4, 5), 2);
  CHECK(inc.preserves_edges());
  CHECK(inc.reflects_edges());
  CHECK(inc.injective());
  const auto sub4 = k_subsets(4, 2);
  const auto sub5 = k_subsets(5, 2);
  for (std::size_t i = 0; i < 6; ++i) CHECK(as_set(sub5[inc.vertex_map[i]]) == as_set(sub4[i]));
}

TEST_CASE("kneser laxator") {
  auto phi = kneser_laxator(2, 2, 2);
  REQUIRE(phi.vertex_map.size() == 2);
  CHECK(k_subsets(4, 2)[phi.vertex_map[0]] == KSubset{0, 1});
  CHECK(k_subsets(4, 2)[phi.vertex_map[1]] == KSubset{2, 3});
  CHECK(phi.target.adjacent(phi.vertex_map[0], phi.vertex_map[1]));
  CHECK(phi.preserves_edges());

  auto right_empty = kneser_laxator(4, 0, 2);
  for (std::size_t i = 0; i < 6; ++i) CHECK(right_empty.vertex_map[i] == i);

  // (KG2 + KG2) + KG3 and KG2 + (KG2 + KG3) land on the same subsets.
  auto left = kneser_laxator(2, 2, 2), outer_l = kneser_laxator(4, 3, 2);
  auto inner = kneser_laxator(2, 3, 2), outer_r = kneser_laxator(2, 5, 2);
  std::vector<std::size_t> via_left, via_right;
  for (auto v : left.vertex_map) via_left.push_back(outer_l.vertex_map[v]);
  for (std::size_t v = 0; v < binomial(3, 2); ++v) via_left.push_back(outer_l.vertex_map[binomial(4, 2) + v]);
  via_right.push_back(outer_r.vertex_map[0]);
  for (auto v : inner.vertex_map) via_right.push_back(outer_r.vertex_map[1 + v]);
  CHECK(via_left == via_right);

  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      auto lax = kneser_laxator(m, n, 2);
      const auto left_count = binomial(m, 2);
      for (std::size_t i = 0; i < left_count; ++i)
        for (std::size_t j = left_count; j < lax.vertex_map.size(); ++j)
          CHECK(lax.target.adjacent(lax.vertex_map[i], lax.vertex_map[j]));
    }
}
