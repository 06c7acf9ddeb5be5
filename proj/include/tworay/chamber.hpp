#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tworay/lattice.hpp"

namespace tworay {

struct ChamberRay {
  Vec2 dir;  // primitive
  std::vector<std::string> vars;
  std::vector<Vec2> cols;  // original columns on this ray
};

enum class EndpointKind { Fibration, DivToPoint, DivToCurve };

inline const char* to_string(EndpointKind k) {
  switch (k) {
    case EndpointKind::Fibration: return "FIBRATION";
    case EndpointKind::DivToPoint: return "DIV_TO_POINT";
    case EndpointKind::DivToCurve: return "DIV_TO_CURVE";
  }
  return "?";
}

// Slope-sorted ray data of a rank-2 grading, oriented so the ray of the first
// column (the exceptional coordinate t) comes first.
struct ChamberFan {
  IntMatrix2xN grading;
  std::vector<ChamberRay> rays;  // rays[0] = t-side extreme of Eff
  size_t m1 = 0, m2 = 0;         // indices of the movable-cone boundary rays

  const ChamberRay& eff_lo() const { return rays.front(); }
  const ChamberRay& eff_hi() const { return rays.back(); }
  const ChamberRay& M1() const { return rays[m1]; }
  const ChamberRay& M2() const { return rays[m2]; }

  // interior walls crossed by the game, in order
  std::vector<size_t> interior_walls() const {
    std::vector<size_t> w;
    for (size_t i = m1 + 1; i < m2; ++i) w.push_back(i);
    return w;
  }
};

// Groups columns into rays sorted away from the first column's ray; rejects
// gradings whose columns span the whole plane or whose first column is not
// extreme.
inline ChamberFan ray_scan(const IntMatrix2xN& grading) {
  if (grading.size() < 3) throw std::invalid_argument("too few columns");
  ChamberFan fan;
  fan.grading = grading;
  std::vector<ChamberRay> rays;
  for (size_t i = 0; i < grading.size(); ++i) {
    Vec2 p = primitive(grading.cols[i]);
    bool merged = false;
    for (auto& r : rays)
      if (r.dir == p) {
        r.vars.push_back(grading.labels[i]);
        r.cols.push_back(grading.cols[i]);
        merged = true;
      }
    if (!merged) rays.push_back({p, {grading.labels[i]}, {grading.cols[i]}});
  }
  Vec2 t = primitive(grading.cols[0]);
  int orientation = 0;
  for (const auto& r : rays) {
    if (r.dir == t) continue;
    Int c = det(t, r.dir);
    if (c == 0) throw std::domain_error("not pointed: opposite rays");
    int sgn = c > 0 ? 1 : -1;
    if (orientation == 0) orientation = sgn;
    else if (orientation != sgn)
      throw std::domain_error("first column's ray is not extreme");
  }
  if (orientation == 0) throw std::domain_error("all columns on one ray");
  // sort by angle from the t-ray; within a strict half-plane the cross product
  // with the fixed orientation is a strict weak order
  std::sort(rays.begin(), rays.end(), [&](const ChamberRay& a, const ChamberRay& b) {
    if (a.dir == b.dir) return false;
    if (a.dir == t) return true;
    if (b.dir == t) return false;
    return orientation * det(a.dir, b.dir) > 0;
  });
  // pointedness across the sorted span
  if (orientation * det(rays.front().dir, rays.back().dir) <= 0)
    throw std::domain_error("not pointed");
  fan.rays = rays;
  fan.m1 = rays[0].vars.size() >= 2 ? 0 : 1;
  size_t last = rays.size() - 1;
  fan.m2 = rays[last].vars.size() >= 2 ? last : last - 1;
  if (fan.m1 >= fan.m2) throw std::domain_error("movable cone is degenerate");
  return fan;
}

// The trichotomy on the M2 end of the movable cone.
inline EndpointKind endpoint_classify(const ChamberFan& fan) {
  if (fan.m2 == fan.rays.size() - 1) return EndpointKind::Fibration;
  size_t on_m2 = fan.M2().vars.size();
  if (on_m2 == 1) return EndpointKind::DivToPoint;
  if (on_m2 == 2) return EndpointKind::DivToCurve;
  throw std::domain_error("more than two generator classes on M2");
}

struct EndpointData {
  EndpointKind kind;
  IMat2 A;                 // the GL(2,Z) row operation used
  IntMatrix2xN normalized; // grading after the row operation
  // fibration
  std::vector<std::pair<std::string, Int>> base;  // boundary coordinates, weights
  // divisorial contraction
  Int d = 0;  // quotient order of the contracted-side structure
  std::string z4, z5;                       // M2 generator and contracted divisor
  std::string z3;                           // second M2 generator (curve case)
  std::vector<std::pair<std::string, Int>> exceptional;  // kappa-weights of E'
  std::vector<std::pair<std::string, Int>> lambda;       // second-row weights
  std::vector<Int> gamma;                   // curve case: weights of Gamma'
  bool fake_quotient = false;               // d > 1
};

// Row operation to the fibration / contraction normal form plus the endpoint
// payload read from the normalized frame.
inline EndpointData endpoint_normalize(const ChamberFan& fan) {
  EndpointData out;
  out.kind = endpoint_classify(fan);
  const auto& grading = fan.grading;
  if (out.kind == EndpointKind::Fibration) {
    const auto& boundary = fan.M2();
    auto r = gl2z_normalize(boundary.cols[0],
                            boundary.cols.size() > 1 ? boundary.cols[1] : boundary.cols[0],
                            NormalizeMode::Fibration);
    out.A = r.A;
    out.normalized = grading.transformed(r.A);
    for (const auto& v : boundary.vars)
      out.base.emplace_back(v, out.normalized.col(v).x);
    for (size_t i = 0; i < grading.size(); ++i) {
      const std::string& lab = grading.labels[i];
      if (std::find(boundary.vars.begin(), boundary.vars.end(), lab) == boundary.vars.end())
        out.lambda.emplace_back(lab, out.normalized.cols[i].y);
    }
    return out;
  }
  // divisorial contraction: one coordinate strictly past M2 is contracted
  std::vector<std::string> beyond;
  for (size_t i = fan.m2 + 1; i < fan.rays.size(); ++i)
    for (const auto& v : fan.rays[i].vars) beyond.push_back(v);
  if (beyond.size() != 1)
    throw std::domain_error("expected exactly one coordinate past M2");
  out.z5 = beyond[0];
  const auto& m2 = fan.M2();
  if (out.kind == EndpointKind::DivToPoint) {
    out.z4 = m2.vars[0];
  } else {
    out.z3 = m2.vars[0];
    out.z4 = m2.vars[1];
  }
  auto r = gl2z_normalize(m2.dir, grading.col(out.z5), NormalizeMode::Contraction);
  out.A = r.A;
  out.d = r.d;
  out.fake_quotient = out.d > 1;
  out.normalized = grading.transformed(r.A);
  for (size_t i = 0; i < grading.size(); ++i) {
    const std::string& lab = grading.labels[i];
    if (lab == out.z5) continue;
    out.lambda.emplace_back(lab, out.normalized.cols[i].y);
    if (lab != out.z4 && lab != out.z3)
      out.exceptional.emplace_back(lab, out.normalized.cols[i].x);
  }
  if (out.kind == EndpointKind::DivToCurve) {
    out.gamma = {out.normalized.col(out.z3).y, out.normalized.col(out.z4).y};
    std::sort(out.gamma.begin(), out.gamma.end());
    if (gcd(out.gamma[0], out.gamma[1]) != 1)
      throw std::domain_error("non-terminal: line of singularities");
  }
  return out;
}

enum class WallSide { Contracted, Extracted };

// Intersection of a divisor class with a wall-crossing curve spanned by two
// coordinate columns; positive on the contracted side when the class sits on
// the same side as -K_Y, negative after the flip.
inline Rat toric_curve_intersection(const Vec2& divisor_class, const Vec2& wall,
                                    const Vec2& va, const Vec2& vb, WallSide side) {
  Int da = det(wall, va), db = det(wall, vb);
  if (da == 0 || db == 0) throw std::domain_error("curve coordinate on the wall");
  if ((da > 0) != (db > 0))
    throw std::domain_error("curve coordinates on opposite sides of the wall");
  Rat num = Rat(det(wall, divisor_class));
  Rat mag = num / (Rat(abs(da)) * Rat(abs(db)));
  return side == WallSide::Contracted ? mag : -mag;
}

}  // namespace tworay
