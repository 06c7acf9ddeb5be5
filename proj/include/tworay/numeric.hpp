#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <stdexcept>
#include <string>

namespace tworay {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline std::string str(const Int& n) { return n.str(); }

inline std::string str(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

// Parses "p", "-p", "p/q". Used for the JSON encoding of rationals.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p) / Rat(q);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// a^-1 mod m for gcd(a, m) = 1, m > 0; result in [0, m).
inline Int mod_inverse(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  Int r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("not invertible mod " + m.str());
  if (s0 < 0) s0 += m;
  return s0;
}

}  // namespace tworay
