#include <doctest.h>

#include "netmod/errors.hpp"
#include "netmod/io.hpp"
#include "netmod/kneser.hpp"

using namespace netmod;

namespace {

const Monoid B = boolean_monoid();

}  // namespace

TEST_CASE("monoid specs") {
  CHECK(parse_monoid_spec("bool").name() == "bool");
  CHECK(parse_monoid_spec("band").name() == "band");
  CHECK(parse_monoid_spec("nat").name() == "nat");
  CHECK(parse_monoid_spec("free:ab").name() == "free:ab");
  CHECK_THROWS_AS(parse_monoid_spec("group"), ParseError);
}

TEST_CASE("network literals") {
  NetworkModel mon(B, Variety::Mon);
  auto g = parse_network("e(3,4)=T * e(1,2)=T", mon, 4);
  CHECK(format_network(g, mon) == "e(1,2)=T * e(3,4)=T");
  CHECK(format_network(parse_network("1", mon, 3), mon) == "1");
  CHECK(format_network(parse_network("e(1,2)=F", mon, 3), mon) == "1");
  CHECK_THROWS_AS(parse_network("e(1,5)=T", mon, 4), ContextError);
  CHECK_THROWS_AS(parse_network("e(1,2)=Q", mon, 4), ParseError);
  CHECK_THROWS_AS(parse_network("e(1,2=T", mon, 4), ParseError);
  CHECK_THROWS_AS(parse_network("e(2,2)=T", mon, 4), ContextError);

  NetworkModel freem(free_monoid("ab"), Variety::Mon);
  auto w = parse_network("e(1,2)=\"ab\" * e(1,3)=\"b\"", freem, 3);
  CHECK(parse_network(format_network(w, freem), freem, 3).element().word() == w.element().word());
}

TEST_CASE("green literals") {
  auto ctx = GreenContext::uniform(SimpleGraph(2), path_band_monoid(), Variety::Mon);
  auto x = normalize(parse_green_word("v1:b * v0:a * v0:c", *ctx), ctx);
  CHECK(format_green(x) == "v1:b * v0:x");
  CHECK(parse_green_word("1", *ctx).empty());
  CHECK_THROWS_AS(parse_green_word("v2:a", *ctx), ContextError);
  auto back = green_from_json(green_to_json(x), B);
  CHECK(equal(back, x));
}

TEST_CASE("network JSON") {
  NetworkModel band(path_band_monoid(), Variety::GMon);
  auto g = parse_network("e(1,2)=a * e(2,3)=b * e(1,2)=c", band, 3);
  auto j = network_to_json(g, band);
  CHECK(j.at("n") == 3);
  CHECK(j.at("variety") == "gmon");
  CHECK(j.at("monoid") == "band");
  auto parsed = network_from_json(j);
  CHECK(parsed.model.equal(parsed.element, g));
  CHECK_THROWS_AS(network_from_json(Json::parse(R"js({"n": 3, "monoid": "bool", "variety": "mon", "word": [{"u": 1}]})js")),
                  ParseError);
}

TEST_CASE("operations") {
  NetworkModel cmon(B, Variety::CMon);
  auto op = parse_operation("((1 2); e(1,3)=T)", cmon, 3);
  CHECK(op.sigma()(0) == 1);
  CHECK(op.profile() == std::vector<std::size_t>{3});
  CHECK(format_operation(op, cmon) == "((1 2); e(1,3)=T)");
  CHECK_THROWS_AS(parse_operation("(1 2); e(1,3)=T", cmon, 3), ParseError);
  CHECK_THROWS_AS(parse_operation("((1 4); 1)", cmon, 3), ParseError);
}

TEST_CASE("DOT output") {
  auto dot = kneser_to_dot(4, 2);
  CHECK(dot.find("label=\"12\"") != std::string::npos);
  CHECK(dot.find("label=\"34\"") != std::string::npos);
  CHECK(dot.find("s0 -- s5") != std::string::npos);
  NetworkModel mon(B, Variety::Mon);
  auto g = parse_network("e(1,2)=T * e(1,3)=T * e(1,2)=T", mon, 3);
  auto ndot = network_to_dot(g, mon);
  CHECK(ndot.find("1 -- 2 [label=\"T\", order=1]") != std::string::npos);
  CHECK(ndot.find("1 -- 2 [label=\"T\", order=3]") != std::string::npos);
}

TEST_CASE("scenarios") {
  auto range = parse_scenario(Json::parse(R"js({
    "space": {"type": "line", "points": [0, 1, 2, 3]}, "L": 1,
    "states": [{"n": 4, "edges": []}], "ops": ["(id; e(1,2)=T * e(1,3)=T)"]})js"));
  REQUIRE(std::holds_alternative<RangeScenario>(range.states));
  const auto& rs = std::get<RangeScenario>(range.states).states;
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].positions[3] == Point{3.0});
  CHECK(range.ops.size() == 1);
  CHECK(state_to_json(rs[0]).at("positions").size() == 4);

  auto finite = parse_scenario(Json::parse(R"js({
    "space": {"type": "finite", "matrix": [[0, 1], [1, 0]]}, "L": 1,
    "states": [{"n": 2, "edges": [[1, 2]], "positions": [1, 2]}]})js"));
  const auto& fs = std::get<RangeScenario>(finite.states).states;
  CHECK(fs[0].positions[1] == Point{1.0});
  CHECK(state_to_json(fs[0]).at("positions")[1] == 2);

  auto bounded = parse_scenario(Json::parse(R"js({"k": 1, "states": [{"n": 3, "edges": [[1, 2]]}]})js"));
  REQUIRE(std::holds_alternative<BoundedScenario>(bounded.states));
  CHECK(std::get<BoundedScenario>(bounded.states).states[0].graph == SimpleGraph(3, {{0, 1}}));

  CHECK_THROWS_AS(parse_scenario(Json::parse(R"js({"k": 1, "states": [{"n": 3, "edges": [[1, 2], [1, 3]]}]})js")),
                  ContextError);
  CHECK_THROWS_AS(parse_scenario(Json::parse(R"js({"space": {"type": "torus"}, "L": 1, "states": []})js")), ParseError);
}
