#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tworay/numeric.hpp"

namespace tworay {

struct Vec2 {
  Int x, y;
  bool operator==(const Vec2&) const = default;
};

struct RVec2 {
  Rat x, y;
  bool operator==(const RVec2&) const = default;
};

inline Int det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat det(const RVec2& a, const RVec2& b) { return a.x * b.y - a.y * b.x; }

inline Int content(const Vec2& v) { return gcd(v.x, v.y); }

inline Vec2 primitive(const Vec2& v) {
  Int c = content(v);
  if (c == 0) throw std::invalid_argument("primitive of zero vector");
  return {v.x / c, v.y / c};
}

// 2x2 matrices, stored row-major.
struct RMat2 {
  Rat a, b, c, d;
  bool operator==(const RMat2&) const = default;
  Rat det() const { return a * d - b * c; }
  RVec2 apply(const RVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

struct IMat2 {
  Int a, b, c, d;
  bool operator==(const IMat2&) const = default;
  Int det() const { return a * d - b * c; }
  Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Vec2 col(int i) const { return i == 0 ? Vec2{a, c} : Vec2{b, d}; }
};

inline RMat2 inverse(const RMat2& m) {
  Rat dt = m.det();
  if (dt == 0) throw std::domain_error("singular 2x2 matrix");
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

inline RVec2 solve2(const RMat2& m, const RVec2& rhs) { return inverse(m).apply(rhs); }

// Invertible R with R*source = target for every pair; nullopt if the
// overdetermined system is inconsistent.  All sources parallel is an error.
inline std::optional<RMat2> solve_basis_change(
    std::span<const std::pair<RVec2, RVec2>> pairs) {
  if (pairs.size() < 2) throw std::invalid_argument("need at least two pairs");
  size_t i0 = 0, i1 = 0;
  bool found = false;
  for (size_t i = 0; i < pairs.size() && !found; ++i)
    for (size_t j = i + 1; j < pairs.size() && !found; ++j)
      if (det(pairs[i].first, pairs[j].first) != 0) {
        i0 = i; i1 = j; found = true;
      }
  if (!found) throw std::domain_error("rank deficient: all sources parallel");
  const RVec2 &s0 = pairs[i0].first, &s1 = pairs[i1].first;
  const RVec2 &t0 = pairs[i0].second, &t1 = pairs[i1].second;
  // R * [s0 s1] = [t0 t1]
  RMat2 S{s0.x, s1.x, s0.y, s1.y};
  RMat2 Sinv = inverse(S);
  RMat2 T{t0.x, t1.x, t0.y, t1.y};
  RMat2 R{T.a * Sinv.a + T.b * Sinv.c, T.a * Sinv.b + T.b * Sinv.d,
          T.c * Sinv.a + T.d * Sinv.c, T.c * Sinv.b + T.d * Sinv.d};
  if (R.det() == 0) return std::nullopt;
  for (const auto& [s, t] : pairs)
    if (!(R.apply(s) == t)) return std::nullopt;
  return R;
}

// Bezout row (p, q) with p*x + q*y = gcd(x, y) > 0, deterministic.
inline std::pair<Int, Int> bezout_row(const Int& x, const Int& y) {
  Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  return {s0, t0};
}

enum class NormalizeMode { Fibration, Contraction };

struct Gl2zResult {
  IMat2 A;   // unimodular row operation
  IMat2 AB;  // normal form, columns A*v4, A*v5
  // Fibration: AB = [[a,b],[0,0]], a >= 0.
  // Contraction: AB = [[0,-d],[e,0]], d = |det B|/content(v4), e = content(v4)... d,e > 0.
  Int a, b;  // fibration data
  Int d, e;  // contraction data
};

// Row-reduces the 2x2 matrix with columns v4, v5 to the fibration or
// contraction normal form.  The contraction form [[0,-d],[e,0]] exists over
// GL(2,Z) iff content(v4)*content(v5) = |det B|, which holds on every corpus
// grading; d*e = |det B|.
inline Gl2zResult gl2z_normalize(const Vec2& v4, const Vec2& v5, NormalizeMode mode) {
  if (v4 == Vec2{0, 0} && v5 == Vec2{0, 0}) throw std::invalid_argument("zero matrix");
  Int dt = det(v4, v5);
  Gl2zResult res;
  if (mode == NormalizeMode::Fibration) {
    if (dt != 0) throw std::invalid_argument("fibration mode needs det = 0");
    Vec2 g = primitive(v4 == Vec2{0, 0} ? v5 : v4);
    auto [p, q] = bezout_row(g.x, g.y);
    IMat2 A{p, q, -g.y, g.x};
    Int a = p * v4.x + q * v4.y;
    if (a < 0) A = IMat2{-A.a, -A.b, -A.c, -A.d};
    res.A = A;
    res.a = A.a * v4.x + A.b * v4.y;
    res.b = A.a * v5.x + A.b * v5.y;
    res.AB = IMat2{res.a, res.b, 0, 0};
  } else {
    if (dt == 0) throw std::invalid_argument("contraction mode needs det != 0");
    Int c4 = content(v4), c5 = content(v5);
    if (c4 * c5 != abs(dt))
      throw std::domain_error("contraction normal form not achievable over GL(2,Z)");
    Vec2 r1{-v4.y / c4, v4.x / c4};
    if (r1.x * v5.x + r1.y * v5.y > 0) r1 = {-r1.x, -r1.y};
    Vec2 r2{-v5.y / c5, v5.x / c5};
    if (r2.x * v4.x + r2.y * v4.y < 0) r2 = {-r2.x, -r2.y};
    res.A = IMat2{r1.x, r1.y, r2.x, r2.y};
    res.d = -(r1.x * v5.x + r1.y * v5.y);
    res.e = r2.x * v4.x + r2.y * v4.y;
    res.AB = IMat2{0, -res.d, res.e, 0};
  }
  return res;
}

// A labeled 2xN integer grading matrix (the bi-gradings of the link tables).
struct IntMatrix2xN {
  std::vector<std::string> labels;
  std::vector<Vec2> cols;

  IntMatrix2xN() = default;
  IntMatrix2xN(std::vector<std::string> labs, std::vector<Vec2> columns)
      : labels(std::move(labs)), cols(std::move(columns)) {
    if (labels.size() != cols.size()) throw std::invalid_argument("label/column count mismatch");
    for (size_t i = 0; i < cols.size(); ++i) {
      if (cols[i] == Vec2{0, 0}) throw std::invalid_argument("zero column: " + labels[i]);
      for (size_t j = i + 1; j < cols.size(); ++j)
        if (labels[i] == labels[j]) throw std::invalid_argument("duplicate label: " + labels[i]);
    }
  }

  size_t size() const { return cols.size(); }

  int index_of(const std::string& lab) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == lab) return static_cast<int>(i);
    return -1;
  }

  const Vec2& col(const std::string& lab) const {
    int i = index_of(lab);
    if (i < 0) throw std::out_of_range("no column " + lab);
    return cols[static_cast<size_t>(i)];
  }

  IntMatrix2xN transformed(const IMat2& A) const {
    IntMatrix2xN out = *this;
    for (auto& c : out.cols) c = A.apply(c);
    return out;
  }
};

}  // namespace tworay
