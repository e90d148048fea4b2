#include <doctest.h>

#include <set>

#include "netmod/errors.hpp"
#include "netmod/io.hpp"
#include "netmod/network.hpp"
#include "netmod/operad.hpp"
#include "netmod/oracle.hpp"

using namespace netmod;

namespace {

const Monoid B = boolean_monoid();
const Element T = B.parse("T");

NetworkElement net(const NetworkModel& model, std::size_t n, std::vector<Edge> edges) {
  std::vector<WeightedEdge> w;
  for (const auto& e : edges) w.push_back({e, T});
  return model.from_letters(n, w);
}

std::set<std::string> distinct(const NetworkModel& model, std::size_t n, std::size_t max_len) {
  OracleAlphabet al(*model.context(n));
  std::set<std::string> out;
  for (const auto& w : all_code_words(al, max_len)) out.insert(al.encode(normalize(al.decode(w), model.context(n)).word()));
  return out;
}

}  // namespace

TEST_CASE("small constituent monoids") {
  NetworkModel mon(B, Variety::Mon);
  CHECK(distinct(mon, 2, 4).size() == 2);
  CHECK(mon.context(0)->size() == 0);
  CHECK(mon.context(1)->size() == 0);
  CHECK(mon.equal(mon.unit(1), mon.unit(1)));

  NetworkModel cmon(B, Variety::CMon);
  CHECK(distinct(cmon, 4, 6).size() == 64);
  CHECK(OrdinaryModel(B).enumerate(4).size() == 64);
}

TEST_CASE("overlay") {
  NetworkModel cmon(B, Variety::CMon);
  auto g = net(cmon, 4, {{0, 1}, {2, 3}});
  auto h = net(cmon, 4, {{0, 1}, {1, 3}});
  CHECK(cmon.equal(cmon.overlay(g, cmon.unit(4)), g));
  CHECK(cmon.support(cmon.overlay(g, h)) == SimpleGraph(4, {{0, 1}, {1, 3}, {2, 3}}));

  NetworkModel mon(B, Variety::Mon);
  auto a = net(mon, 3, {{0, 1}}), b = net(mon, 3, {{0, 2}});
  CHECK_FALSE(mon.equal(mon.overlay(a, b), mon.overlay(b, a)));
  CHECK_FALSE(oracle_equal_mon(mon.overlay(a, b).element().word(), mon.overlay(b, a).element().word(),
                               *mon.context(3)));
  CHECK_THROWS_AS(mon.overlay(a, net(mon, 4, {})), ContextError);
}

TEST_CASE("disjoint union") {
  for (auto v : {Variety::Mon, Variety::GMon}) {
    NetworkModel model(B, v);
    CHECK(model.equal(model.disjoint(model.unit(0), model.unit(0)), model.unit(0)));
    auto a = net(model, 2, {{0, 1}});
    auto left = model.disjoint(a, model.unit(2));
    auto right = model.disjoint(model.unit(2), a);
    CHECK(model.equal(model.overlay(left, right), model.overlay(right, left)));
    CHECK(model.equal(left, net(model, 4, {{0, 1}})));
    CHECK(model.equal(right, net(model, 4, {{2, 3}})));
  }
}

TEST_CASE("symmetric group action") {
  NetworkModel mon(B, Variety::Mon);
  auto g = net(mon, 3, {{0, 2}, {0, 1}});
  CHECK(mon.equal(mon.permute(Permutation::identity(3), g), g));
  auto moved = mon.permute(Permutation::transposition(3, 0, 1), net(mon, 3, {{0, 2}}));
  CHECK(mon.equal(moved, net(mon, 3, {{1, 2}})));
  for (const auto& s : Permutation::all(3))
    for (const auto& t : Permutation::all(3))
      CHECK(mon.equal(mon.permute(s * t, g), mon.permute(s, mon.permute(t, g))));
}

TEST_CASE("induced homomorphisms") {
  NetworkModel nat(nat_monoid(), Variety::CMon);
  NetworkModel boolc(B, Variety::CMon);
  MonoidHom collapse{nat_monoid(), B, [](const Element& e) { return boolean_monoid().parse(e.as_int() > 0 ? "T" : "F"); }};
  const Element two(std::int64_t{2}), zero(std::int64_t{0});
  auto multi = nat.from_letters(3, {{{0, 1}, two}, {{0, 1}, two}, {{1, 2}, zero}, {{0, 2}, Element(std::int64_t{1})}});
  auto simple = induced_hom(collapse, multi, boolc);
  CHECK(boolc.support(simple) == SimpleGraph(3, {{0, 1}, {0, 2}}));
  CHECK(boolc.equal(simple, net(boolc, 3, {{0, 1}, {0, 2}})));
  CHECK(nat.equal(induced_hom(identity_hom(nat_monoid()), multi, nat), multi));

  MonoidHom swap{B, B, [](const Element& e) { return boolean_monoid().parse(e.as_int() ? "F" : "T"); }};
  CHECK_THROWS_AS(induced_hom(swap, simple, boolc), ContextError);
}

TEST_CASE("ordinary model") {
  OrdinaryModel nat(nat_monoid());
  auto a = nat.edge(4, 0, 1, Element(std::int64_t{5}));
  auto b = nat.edge(4, 0, 2, Element(std::int64_t{7}));
  auto ab = nat.overlay(a, b);
  CHECK(nat.equal(ab, nat.overlay(b, a)));
  CHECK(ab.weights[0].as_int() == 5);
  CHECK(ab.weights[1].as_int() == 7);
  for (std::size_t i = 2; i < 6; ++i) CHECK(ab.weights[i].as_int() == 0);

  auto m3 = nat.overlay(nat.edge(3, 1, 2, Element(std::int64_t{2})), nat.edge(3, 1, 2, Element(std::int64_t{3})));
  CHECK(m3.weights[pair_index(1, 2)].as_int() == 5);

  OrdinaryModel sg(B);
  for (const auto& g : sg.enumerate(3))
    for (const auto& h : sg.enumerate(3)) {
      auto u = sg.overlay(g, h);
      CHECK(sg.support(u) == graph_union(sg.support(g), sg.support(h)));
    }
}

TEST_CASE("cmon isomorphism") {
  NetworkModel cmon(B, Variety::CMon);
  auto empty = cmon_iso(cmon, cmon.unit(3));
  for (const auto& w : empty.weights) CHECK(B.is_identity(w));
  auto two = cmon_iso(cmon, net(cmon, 3, {{0, 1}, {0, 2}}));
  CHECK(B.eq(two.weights[pair_index(0, 1)], T));
  CHECK(B.eq(two.weights[pair_index(0, 2)], T));
  CHECK(B.is_identity(two.weights[pair_index(1, 2)]));
  OrdinaryModel sg(B);
  for (const auto& o : sg.enumerate(4)) CHECK(sg.equal(cmon_iso(cmon, cmon_iso_inverse(cmon, o)), o));
  NetworkModel mon(B, Variety::Mon);
  CHECK_THROWS_AS(cmon_iso(mon, mon.unit(2)), ContextError);
}

TEST_CASE("counit") {
  NetworkModel mon(B, Variety::Mon);
  OrdinaryModel sg(B);
  auto g = net(mon, 3, {{0, 1}, {0, 2}, {0, 1}});
  CHECK(mon.equal(counit_eval(mon, mon, g), g));
  CHECK(sg.support(counit_eval(sg, mon, g)) == SimpleGraph(3, {{0, 1}, {0, 2}}));
  CHECK(sg.equal(counit_eval(sg, mon, mon.unit(3)), sg.unit(3)));
  CHECK_THROWS_AS(counit_eval(OrdinaryModel(nat_monoid()), mon, g), ContextError);
}

TEST_CASE("edge placements") {
  auto p = edge_placement(5, 1, 3);
  CHECK(p(0) == 1);
  CHECK(p(1) == 3);
  CHECK(p(2) == 0);
  CHECK(p(3) == 2);
  CHECK(p(4) == 4);
  NetworkModel mon(B, Variety::Mon);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      CHECK(mon.equal(place_edge(mon, T, edge_placement(5, i, j)), place_edge(mon, T, double_transposition(5, i, j))));
}

TEST_CASE("models reject monoids outside the variety") {
  CHECK_THROWS_AS(NetworkModel(path_band_monoid(), Variety::CMon), ContextError);
  CHECK_THROWS_AS(NetworkModel(nat_monoid(), Variety::GMon), ContextError);
}
