#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tworay/pfaffian.hpp"
#include "tworay/ring.hpp"

namespace tworay {

enum class Configuration { A, B, None };

struct WeightConfiguration {
  Configuration label = Configuration::None;
  std::optional<Int> pivot;  // the shared weight pi
};

inline const char* to_string(Configuration c) {
  switch (c) {
    case Configuration::A: return "A";
    case Configuration::B: return "B";
    default: return "NONE";
  }
}

// Configuration of a Tom_k degree pattern: A when the four designated
// ideal-entries share one weight, B when only the antidiagonal pair does.
inline WeightConfiguration detect_configuration(const SkewDegrees& D, int tom_index = 1) {
  if (tom_index < 1 || tom_index > 5) throw std::invalid_argument("Tom index out of range");
  std::vector<size_t> comp;
  for (size_t i = 0; i < 5; ++i)
    if (i + 1 != static_cast<size_t>(tom_index)) comp.push_back(i);
  // designated block: first two complement rows x last two complement columns
  Int a24 = D.d[comp[0]][comp[2]], a25 = D.d[comp[0]][comp[3]];
  Int a34 = D.d[comp[1]][comp[2]], a35 = D.d[comp[1]][comp[3]];
  if (a24 == a25 && a25 == a34 && a34 == a35) return {Configuration::A, a24};
  if (a25 == a34) return {Configuration::B, a25};
  return {Configuration::None, std::nullopt};
}

enum class PurePowerKind { Square, Product, QuadraticForm };

struct PurePowerFinding {
  std::vector<std::string> variables;
  PurePowerKind kind;
  int pfaffian_index;  // 1-based, matching Pf_k
};

inline const char* to_string(PurePowerKind k) {
  switch (k) {
    case PurePowerKind::Square: return "SQUARE";
    case PurePowerKind::Product: return "PRODUCT";
    default: return "QUADRATIC_FORM";
  }
}

// Which pure powers / forms in the ideal variables the configuration forces
// into the Pfaffian equations.  Outside configurations A and B no coordinate
// appears as a pure power, so the report is empty.
inline std::vector<PurePowerFinding> pure_power_report(
    const WeightConfiguration& cfg, const std::vector<std::pair<std::string, Int>>& ideal_vars,
    int tom_index = 1) {
  std::vector<PurePowerFinding> out;
  if (cfg.label == Configuration::None) return out;
  std::vector<std::string> at_pivot;
  for (const auto& [name, w] : ideal_vars)
    if (w == *cfg.pivot) at_pivot.push_back(name);
  if (cfg.label == Configuration::B) {
    if (at_pivot.size() == 1)
      out.push_back({{at_pivot[0]}, PurePowerKind::Square, tom_index});
    else if (at_pivot.size() == 2)
      out.push_back({at_pivot, PurePowerKind::Product, tom_index});
  } else {
    if (at_pivot.size() == 2)
      out.push_back({at_pivot, PurePowerKind::QuadraticForm, tom_index});
    else if (at_pivot.size() == 3) {
      out.push_back({{at_pivot[2]}, PurePowerKind::Square, tom_index});
      out.push_back({{at_pivot[0], at_pivot[1]}, PurePowerKind::QuadraticForm, tom_index});
    }
  }
  return out;
}

// Certifies a SQUARE/PRODUCT finding by locating the monomial in the computed
// Pfaffian rather than predicting it from weights.
inline bool certify_pure_power(const GradedSkewMatrix& M, const PurePowerFinding& f) {
  auto pf = pfaffians5(M);
  const Poly& p = pf[static_cast<size_t>(f.pfaffian_index - 1)];
  const RingPtr& R = M.ring;
  Mono want(R->arity(), 0);
  if (f.kind == PurePowerKind::Square) {
    int i = R->index_of(f.variables[0]);
    if (i < 0) return false;
    want[static_cast<size_t>(i)] = 2;
  } else if (f.kind == PurePowerKind::Product) {
    for (const auto& v : f.variables) {
      int i = R->index_of(v);
      if (i < 0) return false;
      want[static_cast<size_t>(i)] += 1;
    }
  } else {
    return false;  // quadratic forms are certified by rank, not one monomial
  }
  return p.terms().count(want) > 0;
}

struct UnprojectionShape {
  // per unprojection variable: does g_j contain a monomial purely in the
  // even orbinates (t allowed in the lifted form)?
  std::vector<std::pair<std::string, bool>> flags;
  bool pass = false;
};

// Scans the four equations s*y_j = g_j for pure f_j(xi, x1) parts.
// `pure_vars` are the variables allowed in a pure monomial (xi, x1 and t).
inline UnprojectionShape unprojection_shape_check(const std::vector<Poly>& equations,
                                                  const RingPtr& ring,
                                                  const std::string& s_name,
                                                  const std::vector<std::string>& y_names,
                                                  const std::vector<std::string>& pure_vars) {
  int si = ring->index_of(s_name);
  if (si < 0) throw std::invalid_argument("no unprojection variable " + s_name);
  std::vector<int> yi;
  for (const auto& y : y_names) {
    int i = ring->index_of(y);
    if (i < 0) throw std::invalid_argument("no ideal variable " + y);
    yi.push_back(i);
  }
  std::vector<bool> pure_ok(ring->arity(), false);
  for (const auto& v : pure_vars) {
    int i = ring->index_of(v);
    if (i < 0) throw std::invalid_argument("no variable " + v);
    pure_ok[static_cast<size_t>(i)] = true;
  }

  UnprojectionShape res;
  std::vector<bool> seen(y_names.size(), false);
  for (const auto& eq : equations) {
    // an unprojection equation contains the monomial s * y_j
    int which = -1;
    for (size_t j = 0; j < yi.size(); ++j) {
      Mono m(ring->arity(), 0);
      m[static_cast<size_t>(si)] = 1;
      m[static_cast<size_t>(yi[j])] = 1;
      if (eq.terms().count(m)) {
        which = static_cast<int>(j);
        break;
      }
    }
    if (which < 0) continue;
    if (seen[static_cast<size_t>(which)]) continue;
    seen[static_cast<size_t>(which)] = true;
    bool has_pure = false;
    for (const auto& [m, c] : eq.terms()) {
      bool pure = true;
      bool nonconstant = false;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        nonconstant = true;
        if (!pure_ok[i]) pure = false;
      }
      if (pure && nonconstant) {
        has_pure = true;
        break;
      }
    }
    res.flags.emplace_back(y_names[static_cast<size_t>(which)], has_pure);
  }
  if (res.flags.size() < 4)
    throw std::domain_error("fewer than 4 unprojection equations identified");
  int count = 0;
  for (const auto& [y, f] : res.flags) count += f ? 1 : 0;
  res.pass = count >= 3;
  return res;
}

struct CommonZeroResult {
  bool empty;
  // witness data when nonempty: common xi / x1 powers and residual degree
  unsigned xi_power = 0, x1_power = 0;
  unsigned mixed_degree = 0;
};

namespace detail {

// dense univariate gcd over Q
inline std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rat f = a.back() / b.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  trim(a);
  return a;
}

}  // namespace detail

// Decides whether binary forms in (xi, x1) have a common zero on the weighted
// projective line, via monomial content and the gcd of the dehomogenizations.
inline CommonZeroResult common_zero_check(const std::vector<Poly>& forms, const RingPtr& ring,
                                          const std::string& xi_name,
                                          const std::string& x1_name) {
  int xii = ring->index_of(xi_name), x1i = ring->index_of(x1_name);
  if (xii < 0 || x1i < 0) throw std::invalid_argument("missing orbinate variable");
  if (forms.empty()) throw std::invalid_argument("no forms");
  unsigned min_xi = UINT32_MAX, min_x1 = UINT32_MAX;
  for (const auto& f : forms) {
    if (f.is_zero()) throw std::domain_error("zero polynomial among inputs");
    unsigned fxi = UINT32_MAX, fx1 = UINT32_MAX;
    for (const auto& [m, c] : f.terms()) {
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && static_cast<int>(i) != xii && static_cast<int>(i) != x1i)
          throw std::invalid_argument("form not in the two orbinates");
      fxi = std::min(fxi, m[static_cast<size_t>(xii)]);
      fx1 = std::min(fx1, m[static_cast<size_t>(x1i)]);
    }
    min_xi = std::min(min_xi, fxi);
    min_x1 = std::min(min_x1, fx1);
  }
  if (min_xi > 0 || min_x1 > 0) {
    // every form vanishes at a torus-fixed point
    return {false, min_xi, min_x1, 0};
  }
  // dehomogenize at xi = 1 and take the univariate gcd in x1
  std::optional<std::vector<Rat>> g;
  for (const auto& f : forms) {
    std::vector<Rat> coeffs;
    for (const auto& [m, c] : f.terms()) {
      unsigned e = m[static_cast<size_t>(x1i)];
      if (coeffs.size() <= e) coeffs.resize(e + 1, Rat(0));
      coeffs[e] += c;
    }
    g = g ? detail::uni_gcd(*g, coeffs) : coeffs;
  }
  if (!g || g->size() <= 1) return {true, 0, 0, 0};
  return {false, 0, 0, static_cast<unsigned>(g->size() - 1)};
}

}  // namespace tworay
