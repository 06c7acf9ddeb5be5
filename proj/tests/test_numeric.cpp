#include <catch2/catch_amalgamated.hpp>

#include "tworay/numeric.hpp"

using namespace tworay;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/4") == Rat(3) / 4);
  CHECK(parse_rat("-7/2") == Rat(-7) / 2);
  CHECK(parse_rat("12") == Rat(12));
  CHECK(str(Rat(3) / 4) == "3/4");
  CHECK(str(Rat(-6) / 4) == "-3/2");
  CHECK(str(Rat(8) / 2) == "4");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("rationals stay reduced with positive denominator") {
  for (int p = -6; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) {
      Rat r = Rat(p) / q;
      CHECK(den(r) > 0);
      CHECK(gcd(abs(num(r)), den(r)) == 1);
    }
}

TEST_CASE("small-value field axioms") {
  std::vector<Rat> vals;
  for (int p = -3; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) vals.push_back(Rat(p) / q);
  for (const Rat& a : vals)
    for (const Rat& b : vals) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const Rat& c : vals) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}

TEST_CASE("arbitrary precision") {
  Int big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;
  CHECK(big % 1000003 == 0);
  CHECK(str(Rat(big) / (big + 1)).size() > 100);
}

TEST_CASE("modular inverse") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(2, 17) == 9);
  CHECK(mod_inverse(9, 17) == 2);
  CHECK_THROWS(mod_inverse(2, 4));
}
