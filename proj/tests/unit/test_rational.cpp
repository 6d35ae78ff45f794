#include <doctest.h>

#include "nilric/rational.hpp"

using namespace nilric;

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_parse("3") == Rat(3));
  CHECK(rat_parse("-7") == Rat(-7));
  CHECK(rat_parse("2/4") == Rat(1, 2));
  CHECK(rat_parse("1127/1200") == Rat(1127, 1200));
  CHECK(rat_str(rat_parse("3/-6")) == "-1/2");
  CHECK(rat_str(rat_parse(" 7 / 240 ")) == "7/240");

  CHECK_THROWS_AS(rat_parse(""), ValidationError);
  CHECK_THROWS_AS(rat_parse("1/0"), ValidationError);
  CHECK_THROWS_AS(rat_parse("abc"), ValidationError);
  CHECK_THROWS_AS(rat_parse("1.5"), ValidationError);
}

TEST_CASE("rational printing round-trips") {
  for (const char* s : {"0", "-3", "22/7", "-1152/1127", "1000003/999983"}) {
    Rat q = rat_parse(s);
    CHECK(rat_parse(rat_str(q)) == q);
  }
}

TEST_CASE("continued fraction rationalization") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-0.25) == Rat(-1, 4));
  CHECK(rat_from_double(1.0 / 3.0) == Rat(1, 3));
  CHECK(rat_from_double(0.0) == Rat(0));
  // respects the denominator bound and stays close
  double x = 3.14159265358979;
  Rat q = rat_from_double(x, 1000000);
  CHECK(q.get_den() <= 1000000);
  CHECK(std::abs(rat_double(q) - x) < 1e-11);
  Rat coarse = rat_from_double(x, 120);
  CHECK(coarse.get_den() <= 120);
  CHECK(std::abs(rat_double(coarse) - x) < 1e-3);
}

TEST_CASE("quadratic field arithmetic") {
  Quad r2 = quad_parse("sqrt(2)");
  CHECK(r2 * r2 == Quad(Rat(2)));
  Quad x = quad_parse("1+sqrt(2)");
  Quad y = quad_parse("1-sqrt(2)");
  CHECK(x * y == Quad(Rat(-1)));
  CHECK(quad_parse("3/2*sqrt(2)") == Quad(Rat(0), Rat(3, 2)));
  CHECK(quad_parse("2") == Quad(Rat(2)));
  CHECK(x * quad_inverse(x) == Quad(Rat(1)));
  CHECK(quad_str(quad_parse("1-sqrt(2)")) == "1-sqrt(2)");
  CHECK_THROWS_AS(quad_inverse(Quad()), Error);
}
