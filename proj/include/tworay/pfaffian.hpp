#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tworay/ring.hpp"

namespace tworay {

// 5x5 antisymmetric matrix of polynomials with a prescribed degree pattern.
// Entries are stored for i < j; a_ji = -a_ij, zero diagonal.
struct GradedSkewMatrix {
  RingPtr ring;
  std::array<std::array<Poly, 5>, 5> upper;  // upper[i][j] valid for i < j

  static GradedSkewMatrix from_upper(RingPtr R, const std::vector<std::vector<Poly>>& rows) {
    // rows: 4,3,2,1 entries (a12..a15; a23..a25; a34,a35; a45)
    GradedSkewMatrix M;
    M.ring = R;
    if (rows.size() != 4) throw std::invalid_argument("need 4 upper rows");
    for (size_t i = 0; i < 4; ++i) {
      if (rows[i].size() != 4 - i) throw std::invalid_argument("bad upper row length");
      for (size_t k = 0; k < rows[i].size(); ++k) M.upper[i][i + 1 + k] = rows[i][k];
    }
    return M;
  }

  Poly entry(size_t i, size_t j) const {
    if (i == j) return Poly::constant(ring, 0);
    if (i < j) return upper[i][j];
    return -upper[j][i];
  }
};

// Pfaffian of the 4x4 antisymmetric matrix on rows/cols {r0,r1,r2,r3} of M:
// a01*a23 - a02*a13 + a03*a12 in local indices.
inline Poly pfaffian4(const GradedSkewMatrix& M, std::array<size_t, 4> r) {
  return M.entry(r[0], r[1]) * M.entry(r[2], r[3]) -
         M.entry(r[0], r[2]) * M.entry(r[1], r[3]) +
         M.entry(r[0], r[3]) * M.entry(r[1], r[2]);
}

// The five maximal Pfaffians, Pf_k = Pf of M with row/column k deleted (k = 0..4).
inline std::array<Poly, 5> pfaffians5(const GradedSkewMatrix& M) {
  std::array<Poly, 5> pf;
  for (size_t k = 0; k < 5; ++k) {
    std::array<size_t, 4> rows{};
    size_t w = 0;
    for (size_t i = 0; i < 5; ++i)
      if (i != k) rows[w++] = i;
    pf[k] = pfaffian4(M, rows);
  }
  return pf;
}

// Signed Pfaffian vector (Pf1, -Pf2, Pf3, -Pf4, Pf5); M * signed = 0.
inline std::array<Poly, 5> signed_pfaffians(const GradedSkewMatrix& M) {
  auto pf = pfaffians5(M);
  for (size_t k = 0; k < 5; ++k)
    if (k % 2 == 1) pf[k] = -pf[k];
  return pf;
}

// Symmetric degree pattern d_ij for the entries of a graded skew matrix,
// upper-triangle input as in from_upper.
struct SkewDegrees {
  std::array<std::array<Int, 5>, 5> d{};  // valid off-diagonal

  static SkewDegrees from_upper(const std::vector<std::vector<Int>>& rows) {
    SkewDegrees D;
    if (rows.size() != 4) throw std::invalid_argument("need 4 upper rows");
    for (size_t i = 0; i < 4; ++i) {
      if (rows[i].size() != 4 - i) throw std::invalid_argument("bad upper row length");
      for (size_t k = 0; k < rows[i].size(); ++k) {
        D.d[i][i + 1 + k] = rows[i][k];
        D.d[i + 1 + k][i] = rows[i][k];
      }
    }
    return D;
  }

  // The pattern supports homogeneous Pfaffians iff d_ij = b_i + b_j; returns
  // the b_i when the decomposition exists.
  std::optional<std::array<Rat, 5>> row_degrees() const {
    std::array<Rat, 5> b;
    b[0] = (Rat(d[0][1]) + Rat(d[0][2]) - Rat(d[1][2])) / 2;
    for (size_t j = 1; j < 5; ++j) b[j] = Rat(d[0][j]) - b[0];
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j)
        if (b[i] + b[j] != Rat(d[i][j])) return std::nullopt;
    return b;
  }

  // Degree of Pf_k = sum of b_i over i != k.
  std::optional<std::array<Rat, 5>> pfaffian_degrees() const {
    auto b = row_degrees();
    if (!b) return std::nullopt;
    Rat total = 0;
    for (const auto& x : *b) total += x;
    std::array<Rat, 5> out;
    for (size_t k = 0; k < 5; ++k) out[k] = total - (*b)[k];
    return out;
  }
};

}  // namespace tworay
