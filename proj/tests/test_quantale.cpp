#include "doctest.h"
#include "poskit/error.hpp"
#include "poskit/quantale.hpp"

using namespace poskit;

namespace {
Rat01 r(long n, unsigned long d) { return Rat01::fraction(n, d); }
}  // namespace

TEST_CASE("tensor values") {
  CHECK(luk_tensor(Rat01::one(), r(3, 7)) == r(3, 7));
  CHECK(luk_tensor(r(1, 2), r(7, 10)) == r(1, 5));
  CHECK(luk_tensor(r(1, 4), r(1, 4)) == Rat01::zero());
}

TEST_CASE("pitchfork values") {
  CHECK(pitchfork(r(3, 7), Rat01::zero()) == Rat01::one());
  CHECK(pitchfork(r(1, 2), r(7, 10)) == r(4, 5));
  CHECK(pitchfork(Rat01::one(), r(2, 5)) == Rat01::one());
}

TEST_CASE("truncated minus values") {
  CHECK(trunc_minus(r(1, 2), r(7, 10)) == Rat01::zero());
  CHECK(trunc_minus(r(7, 10), r(1, 2)) == r(1, 5));
  CHECK(trunc_minus(r(4, 9), Rat01::zero()) == r(4, 9));
}

TEST_CASE("truncated plus values") {
  CHECK(oplus(Rat01::zero(), r(3, 8)) == r(3, 8));
  CHECK(oplus(r(1, 2), r(7, 10)) == Rat01::one());
  CHECK(oplus(r(1, 4), r(1, 4)) == r(1, 2));
}

TEST_CASE("adjunction and residuation on a small grid") {
  for (const Rat01& x : unit_grid(6))
    for (const Rat01& u : unit_grid(6))
      for (const Rat01& y : unit_grid(6)) {
        CHECK((luk_tensor(x, u) <= y) == (x <= pitchfork(y, u)));
        CHECK((oplus(x, u) >= y) == (x >= trunc_minus(y, u)));
      }
}

TEST_CASE("minus as a pitchfork composite") {
  for (const Rat01& u : unit_grid(8))
    for (const Rat01& v : unit_grid(8))
      CHECK(trunc_minus(v, u) == pitchfork(Rat01::zero(), pitchfork(u, v)));
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rat01::parse("2/4") == r(1, 2));
  CHECK(Rat01::parse("2/4").str() == "1/2");
  CHECK(Rat01::parse("0").str() == "0");
  CHECK(Rat01::parse("1").str() == "1");
  CHECK(Rat01::parse("7/7").str() == "1");
  CHECK_THROWS_WITH_AS(Rat01::parse("3/2"), doctest::Contains("out of [0,1]"), Error);
  CHECK_THROWS_AS(Rat01::parse("2"), Error);
  CHECK_THROWS_AS(Rat01::parse("-1/2"), Error);
  CHECK_THROWS_AS(Rat01::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat01::parse(""), Error);
  CHECK_THROWS_AS(Rat01::parse("a/b"), Error);
  try {
    Rat01::parse("3/2");
  } catch (const Error& e) {
    CHECK(e.kind() == "ParseError");
  }
}

TEST_CASE("grid contents") {
  auto g = unit_grid(4);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == Rat01::zero());
  CHECK(g[2] == r(1, 2));
  CHECK(g.back() == Rat01::one());
}
