#include <doctest.h>

#include "netmod/kneser.hpp"
#include "netmod/sweep.hpp"

using namespace netmod;

TEST_CASE("parallel sweeps match their serial references") {
  for (auto v : {Variety::Mon, Variety::CMon, Variety::GMon}) {
    auto ctx = GreenContext::uniform(kneser_graph(4, 2), boolean_monoid(), v);
    OracleAlphabet al(*ctx);
    const auto words = all_code_words(al, 4);
    CHECK(canonical_keys(words, al, ctx) == canonical_keys_serial(words, al, ctx));
    CHECK(congruence_labels(al, v, 4) == congruence_labels_serial(al, v, 4));
    if (v == Variety::Mon) CHECK(mon_oracle_keys(words, al) == mon_oracle_keys_serial(words, al));
  }
}

TEST_CASE("packed word indexing") {
  for (std::size_t a : {1, 3, 6}) {
    const auto count = code_word_count(a, 4);
    for (std::size_t i = 0; i < count; ++i) CHECK(code_word_index(code_word_at(i, a), a) == i);
  }
  CHECK(code_word_count(6, 2) == 1 + 6 + 36);
}

TEST_CASE("partition comparison") {
  const std::vector<int> a{0, 0, 1, 2};
  const std::vector<std::string> b{"x", "x", "y", "z"};
  const std::vector<int> c{0, 1, 1, 2};
  CHECK_FALSE(compare_partitions(a, b, 4).has_value());
  auto m = compare_partitions(a, c, 4);
  REQUIRE(m.has_value());
  CHECK(count_classes(a, 4) == 3);
  CHECK(count_classes(c, 2) == 2);
}
