#include <doctest.h>

#include "netmod/algebra.hpp"
#include "netmod/errors.hpp"

using namespace netmod;

namespace {

Element b(const char* s) { return boolean_monoid().parse(s); }

}  // namespace

TEST_CASE("boolean monoid is or with identity F") {
  const auto B = boolean_monoid();
  CHECK(B.eq(B.op(b("T"), b("T")), b("T")));
  for (const char* x : {"F", "T"}) {
    CHECK(B.eq(B.op(b("F"), b(x)), b(x)));
    CHECK(B.eq(B.op(b(x), b(x)), b(x)));
  }
  CHECK(B.is_identity(b("F")));
  CHECK(B.elements()->size() == 2);
  CHECK(check_monoid_laws(B));
  CHECK(is_commutative(B));
  CHECK(is_graphic(B));
}

TEST_CASE("path band products") {
  const auto M = path_band_monoid();
  auto p = [&](const char* s) { return M.parse(s); };
  auto mul = [&](const char* x, const char* y) { return M.format(M.op(p(x), p(y))); };
  CHECK(mul("a", "b") == "x");
  CHECK(mul("b", "c") == "y");
  CHECK(mul("a", "c") == "x");
  CHECK(mul("c", "a") == "y");
  CHECK(mul("x", "b") == "x");
  CHECK(mul("a", "a") == "a");
  const auto els = *M.elements();
  for (const auto& e : els) CHECK(M.eq(M.op(M.identity(), e), e));

  REQUIRE(els.size() == 6);
  std::size_t pairs = 0;
  for (const auto& x : els)
    for (const auto& y : els) {
      CHECK(M.eq(M.op(M.op(x, y), x), M.op(x, y)));
      ++pairs;
    }
  CHECK(pairs == 36);
  CHECK(check_monoid_laws(M));
  CHECK(is_graphic(M));
  CHECK_FALSE(is_commutative(M));
  CHECK(mul("a", "b") == mul("b", "a"));
}

TEST_CASE("nat and free monoids") {
  const auto N = nat_monoid();
  CHECK(N.op(Element(std::int64_t{2}), Element(std::int64_t{3})).as_int() == 5);
  CHECK(N.op(N.identity(), Element(std::int64_t{7})).as_int() == 7);
  CHECK_FALSE(N.is_finite());
  CHECK(check_monoid_laws(N));

  const auto F = free_monoid("ab");
  CHECK(F.format(F.op(F.parse("ab"), F.parse("ba"))) == "\"abba\"");
  CHECK(check_monoid_laws(F));
  CHECK_FALSE(is_commutative(F));
  CHECK_THROWS_AS(F.parse("abc"), ParseError);
}

TEST_CASE("direct product and its structure maps") {
  const auto B = boolean_monoid();
  auto dp = direct_product(B, B);
  const auto& P = dp.product;
  auto tf = Element(Element::Tuple{b("T"), b("F")});
  auto ft = Element(Element::Tuple{b("F"), b("T")});
  auto tt = Element(Element::Tuple{b("T"), b("T")});
  CHECK(P.eq(P.op(tf, ft), tt));
  CHECK(P.eq(dp.inl(b("T")), tf));
  CHECK(B.is_identity(dp.proj_r(dp.inl(b("T")))));
  CHECK(check_monoid_laws(P));
  const auto els = *B.elements();
  for (const auto& a : els) {
    CHECK(B.eq(dp.proj_l(dp.inl(a)), a));
    CHECK(B.eq(dp.proj_r(dp.inr(a)), a));
    CHECK(B.is_identity(dp.proj_l(dp.inr(a))));
  }
}

TEST_CASE("homomorphism checks") {
  const auto B = boolean_monoid();
  MonoidHom collapse{nat_monoid(), B, [&](const Element& e) { return b(e.as_int() > 0 ? "T" : "F"); }};
  CHECK(check_hom(collapse));
  CHECK(check_hom(identity_hom(path_band_monoid())));
  MonoidHom swap{B, B, [&](const Element& e) { return b(B.eq(e, b("T")) ? "F" : "T"); }};
  CHECK_FALSE(check_hom(swap));
}

TEST_CASE("variety membership") {
  CHECK(satisfies_variety(boolean_monoid(), Variety::CMon));
  CHECK(satisfies_variety(path_band_monoid(), Variety::GMon));
  CHECK_FALSE(satisfies_variety(path_band_monoid(), Variety::CMon));
  CHECK_FALSE(satisfies_variety(nat_monoid(), Variety::GMon));
  CHECK(parse_variety("gmon") == Variety::GMon);
  CHECK_THROWS_AS(parse_variety("group"), ParseError);
}

TEST_CASE("table monoid rejects non-associative tables") {
  // x*x = 1 with a non-associative extra entry.
  CHECK_THROWS_AS(table_monoid("bad", {"1", "x", "y"}, {{0, 1, 2}, {1, 0, 1}, {2, 2, 1}}), ContextError);
}
