// Every module invariant suite, one test case each.
#include <doctest.h>

#include "netmod/checks.hpp"

TEST_CASE("module invariant suites") {
  for (const auto& suite : netmod::invariant_suites()) {
    SUBCASE(suite.name.c_str()) {
      auto r = suite.run();
      INFO(suite.name << ": " << r.summary);
      INFO("counterexample: " << r.counterexample);
      CHECK(r.passed);
      CHECK(r.cases > 0);
    }
  }
}
