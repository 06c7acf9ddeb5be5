#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tworay/family.hpp"
#include "tworay/fano.hpp"
#include "tworay/format.hpp"

namespace tworay {

// Class of a Cox coordinate on the blowup as k1*(-K_Y) + k2*E.
struct SectionClass {
  Rat k1, k2;
  bool exact = true;
};

struct CentreNormalForm {
  QuotientSingularity singularity;
  std::string xi, x1, x2;  // orbinate assignment
  Int a_s;
};

// Orbinates are the non-ideal coordinates besides s: xi of weight 2, x1 even,
// x2 odd.  Returns the 1/a_s(1, a1/2, a_s - a1/2) normal form of p_s.
inline CentreNormalForm centre_normal_form(const FanoFamily& f) {
  if (f.fano_index != 2) throw std::domain_error(f.id + ": centre normal form needs index 2");
  if (!f.centre || f.centre->type != "I")
    throw std::domain_error(f.id + ": no type I centre");
  CentreNormalForm out;
  out.xi = "xi";
  Int wxi = f.weight("xi");
  if (wxi != 2) throw std::domain_error(f.id + ": designated xi must have weight 2");
  std::vector<std::string> orb;
  for (const auto& c : f.coordinates) {
    if (c.name == "xi" || c.name == f.centre->coordinate) continue;
    if (c.name.size() && c.name[0] == 'y') continue;
    orb.push_back(c.name);
  }
  if (orb.size() != 2) throw std::domain_error(f.id + ": expected two further orbinates");
  Int w0 = f.weight(orb[0]), w1 = f.weight(orb[1]);
  if (w0 % 2 == w1 % 2) throw std::domain_error(f.id + ": no valid orbinate parity split");
  out.x1 = (w0 % 2 == 0) ? orb[0] : orb[1];
  out.x2 = (w0 % 2 == 0) ? orb[1] : orb[0];
  out.a_s = f.weight(f.centre->coordinate);
  out.singularity = normalize_quotient(out.a_s, 2, f.weight(out.x1), f.weight(out.x2));
  return out;
}

struct LiftClasses {
  CentreNormalForm centre;
  std::map<std::string, SectionClass> classes;  // includes t -> (0, 1)
  Rat m4;
  bool m4_exact = false;
  std::vector<std::string> pure_y;  // y's with a pure f_j part (odd weight)
  std::string y4;                   // the even-weight ideal coordinate
};

namespace detail {

// vanishing order at E of a coordinate with class k1*(-K_Y) + k2*E:
// nu = wt/(2 a_s) - k2
inline Rat vanishing_order(const Rat& weight, const Rat& k2, const Int& a_s) {
  return weight / (2 * Rat(a_s)) - k2;
}

}  // namespace detail

// Lemma-style section classes of every Cox coordinate.  The order of y4 at E
// is pinned by a fixpoint over the equation s*y4 = h4 when equations are
// present; otherwise only the bound m4 >= 1/2 is known and exact is false.
inline LiftClasses lift_classes(const FanoFamily& f) {
  LiftClasses out;
  out.centre = centre_normal_form(f);
  const Int& a_s = out.centre.a_s;
  for (const auto& c : f.coordinates) {
    if (c.name == out.centre.xi || c.name == out.centre.x1) {
      out.classes[c.name] = {Rat(c.weight) / 2, Rat(0)};
    } else if (c.name == out.centre.x2) {
      out.classes[c.name] = {Rat(c.weight) / 2, Rat(-1) / 2};
    } else if (c.name == f.centre->coordinate) {
      out.classes[c.name] = {Rat(c.weight) / 2, Rat(1) / 2};
    } else if (c.weight % 2 == 1) {
      out.classes[c.name] = {Rat(c.weight) / 2, Rat(-1) / 2};
      out.pure_y.push_back(c.name);
    } else {
      if (!out.y4.empty())
        throw std::domain_error(f.id + ": more than one even-weight ideal coordinate");
      out.y4 = c.name;
    }
  }
  if (out.y4.empty()) throw std::domain_error(f.id + ": no even-weight ideal coordinate");
  if (out.pure_y.size() != 3)
    throw std::domain_error(f.id + ": expected exactly three odd-weight ideal coordinates");

  Rat w4 = Rat(f.weight(out.y4));
  out.m4 = Rat(1) / 2;  // the general lower bound
  out.m4_exact = false;
  if (!f.equations.empty()) {
    // locate s*y4 = h4 and iterate the vanishing order of y4
    const RingPtr& R = f.cox_ring;
    int si = R->index_of(f.centre->coordinate), y4i = R->index_of(out.y4);
    const Poly* eq4 = nullptr;
    Mono sy4(R->arity(), 0);
    sy4[static_cast<size_t>(si)] = 1;
    sy4[static_cast<size_t>(y4i)] = 1;
    for (const auto& e : f.equations)
      if (e.terms().count(sy4)) eq4 = &e;
    if (eq4) {
      std::map<std::string, Rat> nu;
      for (const auto& [name, sc] : out.classes)
        nu[name] = detail::vanishing_order(sc.k1 * 2, sc.k2, a_s);
      Rat nu4 = (w4 + Rat(a_s)) / (2 * Rat(a_s));  // bound
      for (int iter = 0; iter < 32; ++iter) {
        std::optional<Rat> best;
        for (const auto& [m, c] : eq4->terms()) {
          if (m == sy4) continue;
          Rat ord = 0;
          for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            const std::string& name = R->name(i);
            if (name == "t") continue;  // exceptional coordinate
            Rat o = name == out.y4 ? nu4 : nu.at(name);
            ord += Rat(m[i]) * o;
          }
          if (!best || ord < *best) best = ord;
        }
        if (!best) break;
        if (*best == nu4) {
          out.m4_exact = true;
          break;
        }
        if (*best < nu4)
          throw std::domain_error(f.id + ": y4 vanishing order fixpoint decreased");
        nu4 = *best;
      }
      out.m4 = nu4 - w4 / (2 * Rat(a_s));
      if (out.m4 < Rat(1) / 2) throw std::domain_error(f.id + ": m4 below the 1/2 bound");
    }
  }
  out.classes[out.y4] = {w4 / 2, -out.m4, out.m4_exact};
  out.classes["t"] = {Rat(0), Rat(1)};
  return out;
}

struct EquationClass {
  Rat k1, k2;         // class k1*(-K_Y) + k2*E
  bool unprojection;  // contains a monomial s*y_j
  std::string y;      // which y_j, when unprojection
};

struct EquationClassReport {
  std::vector<EquationClass> classes;
  bool three_free = false;  // exactly three E-free unprojection equations,
                            // all Pfaffian classes with strictly negative E part
};

// Classes of the lifted equations in the (-K_Y, E) frame; Lemma-style count of
// E-free unprojection equations.
inline EquationClassReport equation_classes(const FanoFamily& f) {
  if (!f.grading || f.equations.empty())
    throw std::domain_error(f.id + ": equation classes need grading and equations");
  const RingPtr& R = f.cox_ring;
  RMat2 Rmat{Rat(f.grading->col("xi").x), Rat(f.grading->col("t").x),
             Rat(f.grading->col("xi").y), Rat(f.grading->col("t").y)};
  RMat2 Rinv = inverse(Rmat);
  int si = R->index_of(f.centre ? f.centre->coordinate : "s");
  std::vector<std::pair<std::string, Mono>> sy;
  for (const auto& c : f.coordinates) {
    if (c.name.size() && c.name[0] == 'y') {
      Mono m(R->arity(), 0);
      m[static_cast<size_t>(si)] = 1;
      m[static_cast<size_t>(R->index_of(c.name))] = 1;
      sy.emplace_back(c.name, m);
    }
  }
  EquationClassReport rep;
  int free_count = 0;
  bool pfaffians_negative = true;
  for (const auto& e : f.equations) {
    if (e.is_zero()) throw std::domain_error(f.id + ": zero equation");
    std::vector<Int> w0, w1;
    for (const auto& col : f.grading->cols) {
      w0.push_back(col.x);
      w1.push_back(col.y);
    }
    auto d0 = weighted_degree(e, w0), d1 = weighted_degree(e, w1);
    if (!d0.homogeneous || !d1.homogeneous)
      throw std::domain_error(f.id + ": nonhomogeneous lifted equation");
    RVec2 cls = Rinv.apply(RVec2{Rat(d0.degree), Rat(d1.degree)});
    EquationClass ec{cls.x, cls.y, false, ""};
    for (const auto& [name, m] : sy)
      if (e.terms().count(m)) {
        ec.unprojection = true;
        ec.y = name;
      }
    if (ec.unprojection && ec.k2 == 0) ++free_count;
    if (!ec.unprojection && ec.k2 >= 0) pfaffians_negative = false;
    rep.classes.push_back(ec);
  }
  rep.three_free = (free_count == 3) && pfaffians_negative;
  return rep;
}

struct GradingConsistency {
  bool consistent = false;
  RMat2 R;      // maps (-K_Y, E)-classes to grading columns
  Rat m4;       // the y4 order resolved against the grading
  std::string mismatch;  // first offending coordinate, when inconsistent
};

// Solves for the GL(2,Q) change of frame taking every section class to its
// published grading column; the tables are only pinned up to GL(2,Z).
inline GradingConsistency grading_consistency(const FanoFamily& f, const LiftClasses& lift) {
  if (!f.grading) throw std::domain_error(f.id + ": no grading");
  GradingConsistency out;
  // solve on (t, xi): their classes (0,1) and (1,0) make R the column matrix
  out.R = RMat2{Rat(f.grading->col("xi").x), Rat(f.grading->col("t").x),
                Rat(f.grading->col("xi").y), Rat(f.grading->col("t").y)};
  if (out.R.det() == 0) throw std::domain_error(f.id + ": rank deficient class set");
  for (const auto& c : f.coordinates) {
    const SectionClass& sc = lift.classes.at(c.name);
    RVec2 col{Rat(f.grading->col(c.name).x), Rat(f.grading->col(c.name).y)};
    if (c.name == lift.y4 && !sc.exact) {
      // solve m4 from the column instead of checking it
      RVec2 cls = solve2(out.R, col);
      if (cls.x != sc.k1 || -cls.y < Rat(1) / 2) {
        out.mismatch = c.name;
        return out;
      }
      out.m4 = -cls.y;
      continue;
    }
    if (!(out.R.apply(RVec2{sc.k1, sc.k2}) == col)) {
      out.mismatch = c.name;
      return out;
    }
    if (c.name == lift.y4) out.m4 = -sc.k2;
  }
  out.consistent = true;
  return out;
}

// PASS iff the three pure parts f_i(xi, x1) have no common zero on the
// punctured (xi, x1) plane; computable only with equations.
struct FirstWallResult {
  bool pass;
  bool symbolic;  // computed from equations rather than declared
  CommonZeroResult witness;
};

inline FirstWallResult first_wall_is_iso(const FanoFamily& f) {
  if (f.equations.empty()) {
    // structural hypotheses hold (validated by lift_classes); declared
    lift_classes(f);
    return {true, false, {true, 0, 0, 0}};
  }
  LiftClasses lift = lift_classes(f);
  const RingPtr& R = f.cox_ring;
  std::map<std::string, Rat> zero;
  for (const auto& c : f.coordinates)
    if (c.name != lift.centre.xi && c.name != lift.centre.x1 &&
        c.name != f.centre->coordinate)
      zero[c.name] = 0;
  zero["t"] = 1;
  std::vector<Poly> fs;
  for (const auto& e : f.equations) {
    Poly r = e.substitute_values(zero);
    if (!r.is_zero()) fs.push_back(r);
  }
  // s survives only via s*y_j monomials, all killed by the substitution
  for (const auto& g : fs)
    if (g.uses_variable(static_cast<size_t>(R->index_of(f.centre->coordinate))))
      throw std::domain_error(f.id + ": unexpected s-term on the first wall");
  CommonZeroResult cz = common_zero_check(fs, R, lift.centre.xi, lift.centre.x1);
  return {cz.empty, true, cz};
}

}  // namespace tworay
