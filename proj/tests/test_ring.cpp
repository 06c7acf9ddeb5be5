#include <catch2/catch_amalgamated.hpp>

#include "tworay/ring.hpp"

using namespace tworay;

static RingPtr R3() { return make_ring({"x", "y", "z"}); }

TEST_CASE("parse and arithmetic") {
  auto R = R3();
  Poly p = parse_poly("2*x^2*y - 1/3*z + 4", R);
  CHECK(p.term_count() == 3);
  Poly q = parse_poly("1/3*z - 4", R);
  Poly s = p + q;
  CHECK(s == parse_poly("2*x^2*y", R));
  CHECK((p - p).is_zero());
  CHECK(parse_poly("x + y", R) * parse_poly("x - y", R) == parse_poly("x^2 - y^2", R));
}

TEST_CASE("printer round-trips") {
  auto R = R3();
  for (const char* src : {"x", "-x + y", "2*x^2*y - 1/3*z + 4", "x*y*z - z^3",
                          "-5/7*x^4 + 2/9", "1"}) {
    Poly p = parse_poly(src, R);
    CHECK(parse_poly(to_string(p), R) == p);
  }
}

TEST_CASE("parser errors") {
  auto R = R3();
  CHECK_THROWS(parse_poly("x + w", R));
  CHECK_THROWS(parse_poly("x ^", R));
  CHECK_THROWS(parse_poly("1/0*x", R));
  CHECK_THROWS(parse_poly("+", R));
}

TEST_CASE("weighted_degree") {
  auto R = make_ring({"x1"});
  CHECK(weighted_degree(parse_poly("x1^2", R), {Int(4)}).degree == 8);

  auto R2 = make_ring({"xi", "y1"});
  auto d = weighted_degree(parse_poly("xi^3*y1", R2), {Int(2), Int(3)});
  CHECK(d.homogeneous);
  CHECK(d.degree == 9);

  auto R3v = make_ring({"xi", "x1"});
  CHECK(!weighted_degree(parse_poly("xi + x1", R3v), {Int(2), Int(4)}).homogeneous);
  CHECK_THROWS(weighted_degree(Poly(R3v), {Int(2), Int(4)}));
}

TEST_CASE("degree is additive on homogeneous products") {
  auto R = make_ring({"x", "y"});
  std::vector<Int> w = {2, 3};
  Poly f = parse_poly("x^3 + x*y^2*x^0 - y^2*x^0*x", R);  // weight-6 pieces
  f = parse_poly("x^3", R) + parse_poly("5*y^2", R);      // both weight 6
  Poly g = parse_poly("x*y + x^0*y*x", R);
  g = parse_poly("7*x*y", R);
  auto df = weighted_degree(f, w), dg = weighted_degree(g, w), dfg = weighted_degree(f * g, w);
  REQUIRE(df.homogeneous);
  REQUIRE(dg.homogeneous);
  REQUIRE(dfg.homogeneous);
  CHECK(dfg.degree == df.degree + dg.degree);
}

TEST_CASE("substitution") {
  auto R = R3();
  Poly p = parse_poly("x^2 + y*z", R);
  CHECK(p.substitute_values({{"x", Rat(2)}}) == parse_poly("4 + y*z", R));
  std::map<std::string, Poly> repl = {{"y", parse_poly("x + z", R)}};
  CHECK(p.substitute(repl) == parse_poly("x^2 + x*z + z^2", R));
}

TEST_CASE("ring mapping") {
  auto R = make_ring({"x", "y"});
  auto S = make_ring({"w", "y", "x"});
  Poly p = parse_poly("x^2 - y", R);
  Poly q = p.mapped_to(S);
  CHECK(q == parse_poly("x^2 - y", S));
  CHECK_THROWS(q.mapped_to(make_ring({"x"})));
}
