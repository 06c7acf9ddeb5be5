#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tworay/numeric.hpp"

namespace tworay {

// Ordered variable names shared by the polynomials of one system.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i)
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate variable " + names_[i]);
  }
  size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(size_t i) const { return names_[i]; }
  int index_of(const std::string& v) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == v) return static_cast<int>(i);
    return -1;
  }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

using Mono = std::vector<unsigned>;  // exponent vector, length = ring arity

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Sparse polynomial over Q.  Terms are kept in a canonical map; no zero
// coefficients are stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rat& c) {
    Poly p(ring);
    if (c != 0) p.terms_[Mono(p.ring_->arity(), 0)] = c;
    return p;
  }
  static Poly variable(RingPtr ring, size_t i, unsigned e = 1) {
    Poly p(ring);
    Mono m(ring->arity(), 0);
    m[i] = e;
    p.terms_[m] = 1;
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [m, cc] : terms_) cc *= c;
    return *this;
  }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly pow(unsigned e) const {
    Poly r = constant(ring_, 1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Substitutes per-variable replacement polynomials (identity when absent).
  Poly substitute(const std::map<std::string, Poly>& repl) const {
    Poly out(ring_);
    std::vector<const Poly*> by_index(ring_->arity(), nullptr);
    for (const auto& [v, p] : repl) {
      int idx = ring_->index_of(v);
      if (idx < 0) throw std::invalid_argument("substitute: no variable " + v);
      p.check_ring(*this);
      by_index[static_cast<size_t>(idx)] = &p;
    }
    for (const auto& [m, c] : terms_) {
      Poly term = constant(ring_, c);
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (by_index[i]) term *= by_index[i]->pow(m[i]);
        else term *= variable(ring_, i, m[i]);
      }
      out += term;
    }
    return out;
  }

  Poly substitute_values(const std::map<std::string, Rat>& vals) const {
    std::map<std::string, Poly> repl;
    for (const auto& [v, c] : vals) repl.emplace(v, constant(ring_, c));
    return substitute(repl);
  }

  // Image in another ring containing (at least) all variables in the support.
  Poly mapped_to(const RingPtr& target) const {
    std::vector<int> idx(ring_->arity());
    for (size_t i = 0; i < ring_->arity(); ++i) {
      idx[i] = target->index_of(ring_->name(i));
    }
    Poly out(target);
    for (const auto& [m, c] : terms_) {
      Mono mm(target->arity(), 0);
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (idx[i] < 0)
          throw std::invalid_argument("mapped_to: target ring lacks " + ring_->name(i));
        mm[static_cast<size_t>(idx[i])] = m[i];
      }
      out.add_term(mm, c);
    }
    return out;
  }

  bool uses_variable(size_t i) const {
    for (const auto& [m, c] : terms_)
      if (m[i] > 0) return true;
    return false;
  }

  void check_ring(const Poly& o) const {
    if (ring_.get() != o.ring_.get()) throw std::invalid_argument("ring mismatch");
  }

 private:
  RingPtr ring_;
  std::map<Mono, Rat> terms_;
};

inline Int mono_weighted_degree(const Mono& m, const std::vector<Int>& w) {
  Int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += Int(m[i]) * w[i];
  return d;
}

struct WeightedDegree {
  bool homogeneous = false;
  Int degree;  // valid when homogeneous
};

// Degree of p for the given weights, or the non-homogeneous marker.
// The zero polynomial has no degree.
inline WeightedDegree weighted_degree(const Poly& p, const std::vector<Int>& w) {
  if (w.size() != p.ring()->arity()) throw std::invalid_argument("weight vector arity mismatch");
  if (p.is_zero()) throw std::domain_error("zero polynomial has no degree");
  std::optional<Int> d;
  for (const auto& [m, c] : p.terms()) {
    Int dm = mono_weighted_degree(m, w);
    if (!d) d = dm;
    else if (*d != dm) return {false, 0};
  }
  return {true, *d};
}

// ---- literal syntax: sum of terms  c * v1^e1 * ... * vk^ek, c as p/q ----

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

  Poly parse() {
    Poly out(ring_);
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+') { ++pos_; }
      else if (peek() == '-') { sign = -1; ++pos_; }
      else if (!first) throw std::invalid_argument("expected + or - in polynomial literal");
      skip_ws();
      out += term(sign);
      skip_ws();
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }

  Poly term(int sign) {
    Rat coeff = sign;
    Mono m(ring_->arity(), 0);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        auto [idx, e] = var_power();
        m[idx] += e;
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (peek() == '*') { ++pos_; continue; }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("empty term in polynomial literal");
    Poly p(ring_);
    p.add_term(m, coeff);
    return p;
  }

  Rat number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Int p(std::string(s_.substr(start, pos_ - start)));
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      size_t qs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (qs == pos_) throw std::invalid_argument("expected denominator");
      Int q(std::string(s_.substr(qs, pos_ - qs)));
      if (q == 0) throw std::invalid_argument("zero denominator");
      return Rat(p) / Rat(q);
    }
    return Rat(p);
  }

  std::pair<size_t, unsigned> var_power() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    int idx = ring_->index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown variable " + name);
    unsigned e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t es = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (es == pos_) throw std::invalid_argument("expected exponent");
      e = static_cast<unsigned>(std::stoul(std::string(s_.substr(es, pos_ - es))));
    }
    return {static_cast<size_t>(idx), e};
  }

  std::string_view s_;
  size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace detail

inline Poly parse_poly(const std::string& s, const RingPtr& ring) {
  return detail::PolyParser(s, ring).parse();
}

// Deterministic printer; round-trips through parse_poly.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest storage-order term first for readability
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ab = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool need_star = false;
    if (ab != 1) {
      os << str(ab);
      need_star = true;
    }
    bool any_var = false;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << p.ring()->name(i);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
      any_var = true;
    }
    if (!any_var && ab == 1) os << "1";
  }
  return os.str();
}

}  // namespace tworay
