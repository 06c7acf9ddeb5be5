#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tworay/numeric.hpp"

namespace tworay {

// Cyclic quotient type 1/r(a,b,c), weights taken mod r.
struct QuotientSingularity {
  Int r;
  Int a, b, c;

  bool operator==(const QuotientSingularity&) const = default;

  std::string display() const {
    return "1/" + r.str() + "(" + a.str() + "," + b.str() + "," + c.str() + ")";
  }
};

// Multiplies by the inverse of the first weight.  The paper's reduction to the
// form 1/r(1, b', r - b') needs b + c = 0 mod r; violations are reported, not
// silently normalized.
inline QuotientSingularity normalize_quotient(const Int& r, const Int& a, const Int& b,
                                              const Int& c) {
  if (r <= 0) throw std::invalid_argument("quotient order must be positive");
  if (gcd(((a % r) + r) % r, r) != 1)
    throw std::domain_error("first weight not invertible mod " + r.str());
  if (((b + c) % r + r) % r != 0)
    throw std::domain_error("not in reducible form: b + c != 0 mod r");
  Int k = mod_inverse(a, r);
  auto red = [&](const Int& w) {
    Int x = (k * w) % r;
    if (x < 0) x += r;
    return x;
  };
  QuotientSingularity q{r, red(a), red(b), red(c)};
  return q;
}

inline QuotientSingularity normalize_quotient(const QuotientSingularity& s) {
  return normalize_quotient(s.r, s.a, s.b, s.c);
}

struct TerminalCheck {
  bool ok;
  std::string reason;  // set on reject
};

// For Fano index 2 the singularity basket consists of odd-order cyclic
// quotients; non-isolated types are rejected independently of the index.
inline TerminalCheck terminal_odd_order_check(const QuotientSingularity& s, const Int& fano_index) {
  if (s.a != 1) return {false, "not in normalized form"};
  if (fano_index == 2 && s.r % 2 == 0) return {false, "even order"};
  if (gcd(s.b, s.r) != 1) return {false, "non-isolated: gcd(b, r) != 1"};
  if ((s.b + s.c) % s.r != 0) return {false, "not of type 1/r(1,a,r-a)"};
  return {true, ""};
}

enum class SolidityVerdict { Nonsolid, Inconclusive };

// lcm(a0, a1) < fano_index certifies non-solidity (weights sorted ascending).
inline SolidityVerdict lcm_criterion(std::vector<Int> weights, const Int& fano_index) {
  if (weights.size() < 2) throw std::invalid_argument("need at least two weights");
  if (fano_index < 2) throw std::invalid_argument("criterion needs index >= 2");
  std::sort(weights.begin(), weights.end());
  return lcm(weights[0], weights[1]) < fano_index ? SolidityVerdict::Nonsolid
                                                  : SolidityVerdict::Inconclusive;
}

inline const char* to_string(SolidityVerdict v) {
  return v == SolidityVerdict::Nonsolid ? "NONSOLID" : "INCONCLUSIVE";
}

}  // namespace tworay
