#include "doctest.h"
#include "einflag/linalg.hpp"
#include "einflag/rational.hpp"

using namespace einflag;

TEST_CASE("rational: arithmetic and normalization") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, -4) == Rat(3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 2) / Rat(-1, 4) == Rat(-2));
  CHECK(Rat(5).is_integer());
  CHECK(!Rat(5, 3).is_integer());
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(abs(Rat(-7, 2)) == Rat(7, 2));
  CHECK(Rat(0).is_zero());
  CHECK((Rat(1, 2) - Rat(1, 2)).is_zero());
}

TEST_CASE("rational: strings round trip") {
  CHECK(Rat(10, 3).str() == "10/3");
  CHECK(Rat(-4).str() == "-4");
  CHECK(Rat::parse("10/3") == Rat(10, 3));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK_THROWS(Rat(1, 0));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("rational: overflow is detected, not wrapped") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  // reduction keeps representable values alive
  CHECK(Rat(INT64_MAX, INT64_MAX) == Rat(1));
}

TEST_CASE("rational: exact linear solve") {
  // x + y/2 = 2, x/3 - y = -5/3  ->  x = 1, y = 2
  std::vector<std::vector<Rat>> a{{Rat(1), Rat(1, 2)}, {Rat(1, 3), Rat(-1)}};
  std::vector<Rat> b{Rat(2), Rat(-5, 3)};
  auto x = solve_linear_exact(a, b);
  CHECK(x[0] == Rat(1));
  CHECK(x[1] == Rat(2));

  std::vector<std::vector<Rat>> sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_THROWS_AS(solve_linear_exact(sing, b), std::runtime_error);
}
