#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tworay/lattice.hpp"

using namespace tworay;

TEST_CASE("solve_basis_change: identity case") {
  std::vector<std::pair<RVec2, RVec2>> pairs = {
      {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
  auto R = solve_basis_change(pairs);
  REQUIRE(R);
  CHECK(*R == RMat2{1, 0, 0, 1});
}

TEST_CASE("solve_basis_change: fractional sources") {
  std::vector<std::pair<RVec2, RVec2>> pairs = {
      {{2, Rat(1) / 5}, {2, 1}}, {{1, Rat(3) / 5}, {1, 0}}};
  auto R = solve_basis_change(pairs);
  REQUIRE(R);
  CHECK(R->det() == -1);
  CHECK(*R == RMat2{1, 0, Rat(3) / 5, -1});
}

TEST_CASE("solve_basis_change: inconsistent overdetermined system") {
  std::vector<std::pair<RVec2, RVec2>> pairs = {
      {{1, 0}, {1, 0}}, {{2, 0}, {0, 1}}};
  CHECK_THROWS_AS(solve_basis_change(pairs), std::domain_error);
  // parallel sources, parallel-consistent targets is rank deficient too
  std::vector<std::pair<RVec2, RVec2>> par = {{{1, 0}, {1, 0}}, {{2, 0}, {2, 0}}};
  CHECK_THROWS_AS(solve_basis_change(par), std::domain_error);
  // three pairs, third breaks consistency -> NONE
  std::vector<std::pair<RVec2, RVec2>> bad = {
      {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{1, 1}, {1, 2}}};
  CHECK(!solve_basis_change(bad));
}

TEST_CASE("solve_basis_change reproduces every pair") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    RMat2 R{d(rng), d(rng), d(rng), d(rng)};
    if (R.det() == 0) continue;
    std::vector<std::pair<RVec2, RVec2>> pairs;
    bool seen_independent = false;
    RVec2 prev{0, 0};
    for (int k = 0; k < 4; ++k) {
      RVec2 s{d(rng), d(rng)};
      if (s == RVec2{0, 0}) s = {1, 0};
      if (det(prev, s) != 0) seen_independent = true;
      prev = s;
      pairs.emplace_back(s, R.apply(s));
    }
    if (!seen_independent) continue;
    auto got = solve_basis_change(pairs);
    REQUIRE(got);
    CHECK(got->det() != 0);
    for (const auto& [s, t] : pairs) CHECK(got->apply(s) == t);
  }
}

TEST_CASE("gl2z_normalize fibration") {
  auto r = gl2z_normalize({1, 0}, {2, 0}, NormalizeMode::Fibration);
  CHECK(r.a == 1);
  CHECK(r.b == 2);
  CHECK(r.AB == IMat2{1, 2, 0, 0});
  CHECK(abs(r.A.det()) == 1);
  CHECK_THROWS(gl2z_normalize({1, 0}, {0, 1}, NormalizeMode::Fibration));
  CHECK_THROWS(gl2z_normalize({0, 0}, {0, 0}, NormalizeMode::Fibration));
}

TEST_CASE("gl2z_normalize contraction") {
  // 39660 boundary columns
  auto r = gl2z_normalize({0, 1}, {-2, 0}, NormalizeMode::Contraction);
  CHECK(r.d == 2);
  CHECK(r.e == 1);
  CHECK(abs(r.A.det()) == 1);
  CHECK(r.A.apply({0, 1}) == Vec2{0, 1});
  CHECK(r.A.apply({-2, 0}) == Vec2{-2, 0});

  auto r2 = gl2z_normalize({0, 1}, {-1, 0}, NormalizeMode::Contraction);
  CHECK(r2.d == 1);
  CHECK(r2.e == 1);

  // non-normalized input
  auto r3 = gl2z_normalize({1, 1}, {0, -3}, NormalizeMode::Contraction);
  CHECK(abs(r3.A.det()) == 1);
  CHECK(r3.A.apply({1, 1}).x == 0);
  CHECK(r3.A.apply({1, 1}).y == r3.e);
  CHECK(r3.A.apply({0, -3}) == Vec2{-r3.d, 0});
  CHECK(r3.d * r3.e == 3);

  CHECK_THROWS(gl2z_normalize({1, 0}, {2, 0}, NormalizeMode::Contraction));
}

TEST_CASE("gl2z_normalize random property: unimodular, exact normal form") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  int done = 0;
  while (done < 300) {
    Vec2 v4{d(rng), d(rng)}, v5{d(rng), d(rng)};
    if (v4 == Vec2{0, 0} || v5 == Vec2{0, 0}) continue;
    Int dt = det(v4, v5);
    if (dt == 0) {
      auto r = gl2z_normalize(v4, v5, NormalizeMode::Fibration);
      CHECK(abs(r.A.det()) == 1);
      CHECK(r.A.apply(v4) == Vec2{r.a, 0});
      CHECK(r.A.apply(v5) == Vec2{r.b, 0});
      CHECK(r.a >= 0);
      ++done;
    } else if (content(v4) * content(v5) == abs(dt)) {
      auto r = gl2z_normalize(v4, v5, NormalizeMode::Contraction);
      CHECK(abs(r.A.det()) == 1);
      CHECK(r.A.apply(v4) == Vec2{0, r.e});
      CHECK(r.A.apply(v5) == Vec2{-r.d, 0});
      CHECK(r.d > 0);
      CHECK(r.e > 0);
      CHECK(r.d * r.e == abs(dt));
      ++done;
    }
  }
}

TEST_CASE("IntMatrix2xN invariants") {
  CHECK_THROWS(IntMatrix2xN({"a", "b"}, {{1, 0}, {0, 0}}));
  CHECK_THROWS(IntMatrix2xN({"a", "a"}, {{1, 0}, {0, 1}}));
  IntMatrix2xN m({"a", "b"}, {{1, 0}, {0, 1}});
  CHECK(m.col("b") == Vec2{0, 1});
  CHECK_THROWS(m.col("c"));
}
