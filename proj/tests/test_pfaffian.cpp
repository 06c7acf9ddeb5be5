#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tworay/pfaffian.hpp"

using namespace tworay;

namespace {

// determinant of a 4x4 polynomial matrix by Laplace expansion
Poly det4(const std::array<std::array<Poly, 4>, 4>& m, const RingPtr& R) {
  auto det3 = [&](std::array<size_t, 3> rows, std::array<size_t, 3> cols) {
    Poly d = Poly::constant(R, 0);
    d += m[rows[0]][cols[0]] * (m[rows[1]][cols[1]] * m[rows[2]][cols[2]] -
                                m[rows[1]][cols[2]] * m[rows[2]][cols[1]]);
    d -= m[rows[0]][cols[1]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[2]] -
                                m[rows[1]][cols[2]] * m[rows[2]][cols[0]]);
    d += m[rows[0]][cols[2]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[1]] -
                                m[rows[1]][cols[1]] * m[rows[2]][cols[0]]);
    return d;
  };
  Poly d = Poly::constant(R, 0);
  std::array<size_t, 3> rows{1, 2, 3};
  int sign = 1;
  for (size_t j = 0; j < 4; ++j) {
    std::array<size_t, 3> cols{};
    size_t w = 0;
    for (size_t c = 0; c < 4; ++c)
      if (c != j) cols[w++] = c;
    Poly cof = m[0][j] * det3(rows, cols);
    d += sign > 0 ? cof : -cof;
    sign = -sign;
  }
  return d;
}

GradedSkewMatrix random_skew(const RingPtr& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-10, 10);
  std::vector<std::vector<Poly>> rows;
  for (int i = 0; i < 4; ++i) {
    std::vector<Poly> row;
    for (int j = 0; j < 4 - i; ++j) row.push_back(Poly::constant(R, c(rng)));
    rows.push_back(row);
  }
  return GradedSkewMatrix::from_upper(R, rows);
}

}  // namespace

TEST_CASE("generic 4x4 pfaffian expansion") {
  std::vector<std::string> names;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      names.push_back("a" + std::to_string(i) + std::to_string(j));
  auto R = make_ring(names);
  std::vector<std::vector<Poly>> rows;
  for (int i = 1; i <= 4; ++i) {
    std::vector<Poly> row;
    for (int j = i + 1; j <= 5; ++j)
      row.push_back(parse_poly("a" + std::to_string(i) + std::to_string(j), R));
    rows.push_back(row);
  }
  auto M = GradedSkewMatrix::from_upper(R, rows);
  auto pf = pfaffians5(M);
  CHECK(pf[0] == parse_poly("a23*a45 - a24*a35 + a25*a34", R));
}

TEST_CASE("Buchsbaum-Eisenbud syzygy M * signed_pf = 0 on random integer matrices") {
  auto R = make_ring({"u"});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto M = random_skew(R, rng);
    auto spf = signed_pfaffians(M);
    for (size_t i = 0; i < 5; ++i) {
      Poly acc = Poly::constant(R, 0);
      for (size_t j = 0; j < 5; ++j) acc += M.entry(i, j) * spf[j];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("pf^2 = det for 4x4 skew matrices") {
  auto R = make_ring({"u"});
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto M = random_skew(R, rng);
    // use rows/cols 1..4 of the 5x5 container as a 4x4 matrix
    std::array<std::array<Poly, 4>, 4> m;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) m[i][j] = M.entry(i + 1, j + 1);
    Poly pf = pfaffian4(M, {1, 2, 3, 4});
    CHECK(pf * pf == det4(m, R));
  }
}

TEST_CASE("antisymmetry guard") {
  auto R = make_ring({"u"});
  GradedSkewMatrix M = GradedSkewMatrix::from_upper(
      R, {{parse_poly("u", R), Poly::constant(R, 1), Poly::constant(R, 2), Poly::constant(R, 3)},
          {Poly::constant(R, 4), Poly::constant(R, 5), Poly::constant(R, 6)},
          {Poly::constant(R, 7), Poly::constant(R, 8)},
          {Poly::constant(R, 9)}});
  CHECK(M.entry(1, 0) == -parse_poly("u", R));
  CHECK(M.entry(2, 2).is_zero());
  CHECK_THROWS(GradedSkewMatrix::from_upper(R, {{}}));
}

TEST_CASE("degree pattern of the 1405 cover matrix") {
  auto D = SkewDegrees::from_upper({{3, 3, 4, 4}, {4, 5, 5}, {5, 5}, {6}});
  auto pf = D.pfaffian_degrees();
  REQUIRE(pf);
  CHECK((*pf)[0] == 10);
  // an incompatible pattern has no row-degree decomposition
  auto bad = SkewDegrees::from_upper({{3, 3, 4, 4}, {4, 5, 5}, {5, 5}, {7}});
  CHECK(!bad.row_degrees());
}
