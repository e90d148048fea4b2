#include <doctest.h>

#include <stdexcept>

#include "netmod/errors.hpp"
#include "netmod/io.hpp"
#include "netmod/operad.hpp"

using namespace netmod;

namespace {

const Monoid B = boolean_monoid();
const Element T = B.parse("T");

NetworkElement net(const NetworkModel& model, std::size_t n, std::vector<Edge> edges) {
  std::vector<WeightedEdge> w;
  for (const auto& e : edges) w.push_back({e, T});
  return model.from_letters(n, w);
}

std::shared_ptr<const RangeLimit> line(double L) {
  return std::make_shared<RangeLimit>(RangeLimit{MetricSpace::line(), L});
}

}  // namespace

TEST_CASE("operad composition") {
  NetworkModel cmon(B, Variety::CMon);
  OperadOperation outer({2, 2}, Permutation::identity(4), cmon.unit(4));
  OperadOperation e({2}, Permutation::identity(2), net(cmon, 2, {{0, 1}}));
  auto c = operad_compose(cmon, outer, {e, e});
  CHECK(c.profile() == std::vector<std::size_t>{2, 2});
  CHECK(cmon.equal(c.network(), net(cmon, 4, {{0, 1}, {2, 3}})));

  OperadOperation g({1, 3}, Permutation::parse_cycles("(1 2 3)", 4), net(cmon, 4, {{0, 3}}));
  auto left = operad_compose(cmon, OperadOperation::identity(cmon, 4), {g});
  auto right = operad_compose(cmon, g, {OperadOperation::identity(cmon, 1), OperadOperation::identity(cmon, 3)});
  CHECK(operations_equal(cmon, left, g));
  CHECK(operations_equal(cmon, right, g));

  CHECK_THROWS_AS(operad_compose(cmon, outer, {e}), ContextError);
  CHECK_THROWS_AS(OperadOperation({2, 1}, Permutation::identity(4), cmon.unit(4)), ContextError);
}

TEST_CASE("degree helpers") {
  auto tri = complete_graph(3);
  SimpleGraph iso(2);
  CHECK(degree(iso, 0) == 0);
  for (std::size_t v = 0; v < 3; ++v) CHECK(degree(tri, v) == 2);
  CHECK(is_k_bounded(tri, 2));
  CHECK_FALSE(is_k_bounded(tri, 1));
  CHECK_THROWS_AS(degree(tri, 3), std::out_of_range);
}

TEST_CASE("range-limited action") {
  NetworkModel sg(B, Variety::CMon);
  auto range = line(1.0);
  auto s1 = make_range_state(range, SimpleGraph(2, {{0, 1}}), {{0.0}, {1.0}});
  auto s2 = make_range_state(range, SimpleGraph(2), {{5.0}, {7.0}});
  auto id = act_range_limited(OperadOperation({2, 2}, Permutation::identity(4), sg.unit(4)), sg, {s1, s2});
  CHECK(id.graph == SimpleGraph(4, {{0, 1}}));
  CHECK(id.positions == std::vector<Point>{{0.0}, {1.0}, {5.0}, {7.0}});

  auto pts = make_range_state(range, SimpleGraph(4), {{0.0}, {1.0}, {2.0}, {3.0}});
  auto boundary = act_range_limited(OperadOperation({4}, Permutation::identity(4), net(sg, 4, {{0, 1}})), sg, {pts});
  CHECK(boundary.graph == SimpleGraph(4, {{0, 1}}));
  auto mixed = act_range_limited(OperadOperation({4}, Permutation::identity(4), net(sg, 4, {{0, 1}, {0, 2}})), sg, {pts});
  CHECK(mixed.graph == SimpleGraph(4, {{0, 1}}));

  // Positions travel with their vertices.
  auto swapped = act_range_limited(
      OperadOperation({4}, Permutation::parse_cycles("(1 3)", 4), net(sg, 4, {{0, 1}})), sg, {pts});
  CHECK(swapped.positions[0] == Point{2.0});
  CHECK(swapped.graph == SimpleGraph(4, {{0, 1}}));

  CHECK_THROWS_AS(make_range_state(range, SimpleGraph(2, {{0, 1}}), {{0.0}, {1.5}}), ContextError);
  auto other = make_range_state(line(2.0), SimpleGraph(2), {{0.0}, {1.0}});
  CHECK_THROWS_AS(act_range_limited(OperadOperation({2, 2}, Permutation::identity(4), sg.unit(4)), sg, {s1, other}),
                  ContextError);
}

TEST_CASE("finite metric spaces") {
  auto m = MetricSpace::finite({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(m.distance({0}, {2}) == 2.0);
  CHECK_FALSE(m.contains({3}));
  CHECK_THROWS_AS(MetricSpace::finite({{0, 1}, {2, 0}}), ContextError);
  CHECK_THROWS_AS(MetricSpace::finite({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), ContextError);
}

TEST_CASE("bounded-degree action") {
  NetworkModel gmon(B, Variety::GMon);
  auto g = net(gmon, 3, {{0, 2}, {1, 2}});
  auto h = make_bounded(1, SimpleGraph(3, {{0, 1}}));
  CHECK(act_bounded_degree(gmon, g, h).graph == h.graph);
  auto empty = make_bounded(1, SimpleGraph(3));
  CHECK(act_bounded_degree(gmon, g, empty).graph == SimpleGraph(3, {{0, 2}}));
  CHECK(act_bounded_degree(gmon, gmon.unit(3), h).graph == h.graph);
  CHECK_THROWS_AS(make_bounded(1, complete_graph(3)), ContextError);
  CHECK_THROWS_AS(act_bounded_degree(NetworkModel(B, Variety::Mon), NetworkModel(B, Variety::Mon).unit(3), h),
                  ContextError);

  // Action law on all words of length <= 3 over n = 4 with k = 2.
  std::vector<Edge> all_edges;
  for (std::size_t p = 0; p < 6; ++p) all_edges.push_back(pair_at(p));
  std::vector<std::vector<Edge>> words{{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::vector<Edge>> next;
    for (const auto& w : words)
      if (w.size() == len - 1)
        for (const auto& e : all_edges) {
          auto v = w;
          v.push_back(e);
          next.push_back(v);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  const auto start = make_bounded(2, SimpleGraph(4, {{0, 1}}));
  for (const auto& a : words)
    for (const auto& b : {std::vector<Edge>{{0, 2}, {0, 3}}, std::vector<Edge>{{2, 3}}}) {
      auto ga = net(gmon, 4, a), gb = net(gmon, 4, b);
      auto staged = act_bounded_degree(gmon, gb, act_bounded_degree(gmon, ga, start));
      auto joint = act_bounded_degree(gmon, gmon.overlay(ga, gb), start);
      CHECK(staged.graph == joint.graph);
      CHECK(is_k_bounded(joint.graph, 2));
    }
}

TEST_CASE("full bounded-degree action") {
  NetworkModel gmon(B, Variety::GMon);
  auto a = make_bounded(2, SimpleGraph(2, {{0, 1}}));
  auto b = make_bounded(2, complete_graph(3));
  auto id = full_bounded_degree_action(gmon, OperadOperation({2, 3}, Permutation::identity(5), gmon.unit(5)), {a, b});
  CHECK(id.graph == graph_sum(a.graph, b.graph));
  auto g = net(gmon, 3, {{0, 1}});
  auto single = full_bounded_degree_action(gmon, OperadOperation({3}, Permutation::identity(3), g),
                                           {make_bounded(2, SimpleGraph(3))});
  CHECK(single.graph == act_bounded_degree(gmon, g, make_bounded(2, SimpleGraph(3))).graph);
  CHECK_THROWS_AS(full_bounded_degree_action(gmon, OperadOperation({2, 3}, Permutation::identity(5), gmon.unit(5)),
                                             {a, make_bounded(3, complete_graph(3))}),
                  ContextError);
}
