#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tworay/ring.hpp"

namespace tworay {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("budget exceeded") {}
};

// Reduction-step budget shared along one computation.
struct Budget {
  long long remaining = 1'000'000;
  void tick() {
    if (--remaining < 0) throw BudgetExceeded();
  }
};

// Weighted degree-reverse-lexicographic order, optionally with an elimination
// block compared first.  Weights default to 1.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(size_t arity, std::vector<Int> weights = {}) {
    MonomialOrder o;
    o.arity_ = arity;
    o.weights_ = weights.empty() ? std::vector<Int>(arity, 1) : std::move(weights);
    if (o.weights_.size() != arity) throw std::invalid_argument("order weight arity");
    o.block_.assign(arity, 0);
    return o;
  }

  // Variables in `elim` (by index) are compared first: lead terms free of them
  // certify membership in the subring.
  static MonomialOrder block(size_t arity, const std::vector<size_t>& elim,
                             std::vector<Int> weights = {}) {
    MonomialOrder o = grevlex(arity, std::move(weights));
    o.block_.assign(arity, 1);
    for (size_t i : elim) o.block_.at(i) = 0;
    o.has_block_ = true;
    return o;
  }

  size_t arity() const { return arity_; }
  const std::vector<Int>& weights() const { return weights_; }
  bool in_elim_block(size_t i) const { return block_[i] == 0; }

  // -1: a < b, 0: equal, +1: a > b
  int compare(const Mono& a, const Mono& b) const {
    if (has_block_) {
      int c = cmp_block(a, b, 0);
      if (c != 0) return c;
      return cmp_block(a, b, 1);
    }
    return cmp_block(a, b, -1);
  }
  bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }

 private:
  int cmp_block(const Mono& a, const Mono& b, int blk) const {
    Int da = 0, db = 0;
    for (size_t i = 0; i < arity_; ++i) {
      if (blk >= 0 && block_[i] != blk) continue;
      da += Int(a[i]) * weights_[i];
      db += Int(b[i]) * weights_[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse lex tie-break within the block
    for (size_t k = arity_; k-- > 0;) {
      if (blk >= 0 && block_[k] != blk) continue;
      if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
    }
    return 0;
  }

  size_t arity_ = 0;
  std::vector<Int> weights_;
  std::vector<int> block_;
  bool has_block_ = false;
};

namespace detail {

// One polynomial with terms sorted descending for the active order.
struct OrderedPoly {
  std::vector<std::pair<Mono, Rat>> terms;
  const Mono& lm() const { return terms.front().first; }
  const Rat& lc() const { return terms.front().second; }
  bool is_zero() const { return terms.empty(); }
};

inline OrderedPoly order_poly(const Poly& p, const MonomialOrder& ord) {
  OrderedPoly op;
  op.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(op.terms.begin(), op.terms.end(),
            [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
  return op;
}

inline Poly to_poly(const OrderedPoly& op, const RingPtr& ring) {
  Poly p(ring);
  for (const auto& [m, c] : op.terms) p.add_term(m, c);
  return p;
}

inline void make_monic(OrderedPoly& p) {
  if (p.is_zero()) return;
  Rat lc = p.lc();
  if (lc == 1) return;
  for (auto& [m, c] : p.terms) c /= lc;
}

// p -= c * x^m * q
inline void submul(OrderedPoly& p, const Rat& c, const Mono& m, const OrderedPoly& q,
                   const MonomialOrder& ord) {
  std::vector<std::pair<Mono, Rat>> merged;
  merged.reserve(p.terms.size() + q.terms.size());
  size_t i = 0, j = 0;
  while (i < p.terms.size() || j < q.terms.size()) {
    if (j == q.terms.size()) {
      merged.push_back(p.terms[i++]);
      continue;
    }
    Mono qm = mono_mul(m, q.terms[j].first);
    Rat qc = -c * q.terms[j].second;
    if (i == p.terms.size()) {
      if (qc != 0) merged.emplace_back(std::move(qm), std::move(qc));
      ++j;
      continue;
    }
    int cmp = ord.compare(p.terms[i].first, qm);
    if (cmp > 0) {
      merged.push_back(p.terms[i++]);
    } else if (cmp < 0) {
      if (qc != 0) merged.emplace_back(std::move(qm), std::move(qc));
      ++j;
    } else {
      Rat sum = p.terms[i].second + qc;
      if (sum != 0) merged.emplace_back(p.terms[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  p.terms = std::move(merged);
}

// Full normal form of p against basis (every term reduced).
inline OrderedPoly normal_form(OrderedPoly p, const std::vector<OrderedPoly>& basis,
                               const MonomialOrder& ord, Budget& budget) {
  OrderedPoly rem;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lm(), p.lm())) {
        budget.tick();
        Mono q = mono_div(p.lm(), g.lm());
        Rat c = p.lc() / g.lc();
        submul(p, c, q, g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  return rem;
}

inline OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& ord) {
  Mono l = mono_lcm(f.lm(), g.lm());
  OrderedPoly s = f;
  // s = (l/lm f) * f - (lc f / lc g) (l/lm g) * g, then strip the lead cancel
  Mono mf = mono_div(l, f.lm());
  for (auto& [m, c] : s.terms) m = mono_mul(m, mf);
  submul(s, f.lc() / g.lc(), mono_div(l, g.lm()), g, ord);
  return s;
}

// Buchberger with the coprime and chain criteria; returns the reduced basis.
inline std::vector<OrderedPoly> buchberger(std::vector<OrderedPoly> gens,
                                           const MonomialOrder& ord, Budget& budget) {
  std::vector<OrderedPoly> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    make_monic(g);
    basis.push_back(std::move(g));
  }
  struct Pair {
    size_t i, j;
    Mono lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) { return ord.compare(a.lcm, b.lcm) > 0; };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mono_lcm(basis[i].lm(), basis[j].lm())});
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };
  for (size_t j = 1; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mono_lcm(basis[i].lm(), basis[j].lm())});
  std::sort(pairs.begin(), pairs.end(), pair_less);

  std::set<std::pair<size_t, size_t>> done;
  while (!pairs.empty()) {
    Pair pr = pairs.back();
    pairs.pop_back();
    done.insert({pr.i, pr.j});
    const auto& f = basis[pr.i];
    const auto& g = basis[pr.j];
    if (mono_coprime(f.lm(), g.lm())) continue;  // Buchberger 1
    bool chained = false;                        // Buchberger 2 (chain criterion)
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(basis[k].lm(), pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (done.count({key_ik.first, key_ik.second}) &&
          done.count({key_jk.first, key_jk.second}))
        chained = true;
    }
    if (chained) continue;
    OrderedPoly s = normal_form(spoly(f, g, ord), basis, ord, budget);
    if (s.is_zero()) continue;
    make_monic(s);
    basis.push_back(std::move(s));
    push_pairs_for(basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<OrderedPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(basis[j].lm(), basis[i].lm()) &&
          (!mono_divides(basis[i].lm(), basis[j].lm()) || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce
  std::vector<OrderedPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OrderedPoly r = normal_form(minimal[i], others, ord, budget);
    if (!r.is_zero()) {
      make_monic(r);
      reduced.push_back(std::move(r));
    }
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) {
              return ord.compare(a.lm(), b.lm()) < 0;
            });
  return reduced;
}

}  // namespace detail

// An ideal with an optional cached reduced basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.ring().get() != ring_.get()) throw std::invalid_argument("generator ring mismatch");
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool has_basis() const { return basis_.has_value(); }
  const std::vector<Poly>& basis() const {
    if (!basis_) throw std::logic_error("no cached basis");
    return *basis_;
  }
  const MonomialOrder& basis_order() const {
    if (!order_) throw std::logic_error("no cached basis");
    return *order_;
  }

  void cache_basis(std::vector<Poly> basis, MonomialOrder ord) {
    basis_ = std::move(basis);
    order_ = std::move(ord);
  }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::optional<std::vector<Poly>> basis_;
  std::optional<MonomialOrder> order_;
};

// Reduced Groebner basis; idempotent on its own output.
inline Ideal groebner(const Ideal& I, const MonomialOrder& ord, Budget* budget = nullptr) {
  Budget local;
  Budget& b = budget ? *budget : local;
  std::vector<detail::OrderedPoly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(detail::order_poly(g, ord));
  auto red = detail::buchberger(std::move(gens), ord, b);
  std::vector<Poly> out;
  for (const auto& g : red) out.push_back(detail::to_poly(g, I.ring()));
  Ideal J(I.ring(), out);
  J.cache_basis(std::move(out), ord);
  return J;
}

inline Poly normal_form(const Poly& f, const Ideal& I_with_basis, Budget* budget = nullptr) {
  Budget local;
  Budget& b = budget ? *budget : local;
  const auto& ord = I_with_basis.basis_order();
  std::vector<detail::OrderedPoly> basis;
  for (const auto& g : I_with_basis.basis()) basis.push_back(detail::order_poly(g, ord));
  auto r = detail::normal_form(detail::order_poly(f, ord), basis, ord, b);
  return detail::to_poly(r, f.ring());
}

inline bool contains(const Ideal& I_with_basis, const Poly& f, Budget* budget = nullptr) {
  return normal_form(f, I_with_basis, budget).is_zero();
}

inline bool is_unit_ideal(const Ideal& I_with_basis) {
  const auto& b = I_with_basis.basis();
  return b.size() == 1 && !b[0].is_zero() &&
         b[0].terms().begin()->first == Mono(I_with_basis.ring()->arity(), 0);
}

// I : v^infty.  General route: adjoin w, add w*v - 1, eliminate w.
inline Ideal saturate(const Ideal& I, const std::string& v, Budget* budget = nullptr) {
  const RingPtr& R = I.ring();
  int vi = R->index_of(v);
  if (vi < 0) throw std::invalid_argument("saturate: no variable " + v);
  std::vector<std::string> ext_names = {"_w"};
  for (const auto& n : R->names()) ext_names.push_back(n);
  RingPtr E = make_ring(ext_names);
  std::vector<Poly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.mapped_to(E));
  Poly rel = Poly::variable(E, 0) * Poly::variable(E, static_cast<size_t>(E->index_of(v))) -
             Poly::constant(E, 1);
  gens.push_back(rel);
  auto ord = MonomialOrder::block(E->arity(), {0});
  Ideal G = groebner(Ideal(E, gens), ord, budget);
  std::vector<Poly> kept;
  for (const auto& g : G.basis())
    if (!g.uses_variable(0)) kept.push_back(g.mapped_to(R));
  return Ideal(R, kept);
}

// Fast path for ideals homogeneous under positive weights: with a weighted
// grevlex order in which v is the cheapest tie-break variable, dividing each
// reduced basis element by its v-power saturates the ideal.
inline Ideal saturate_graded(const Ideal& I, const std::string& v,
                             const std::vector<Int>& weights, Budget* budget = nullptr) {
  const RingPtr& R = I.ring();
  int vi = R->index_of(v);
  if (vi < 0) throw std::invalid_argument("saturate: no variable " + v);
  for (const auto& g : I.generators())
    if (!g.is_zero() && !weighted_degree(g, weights).homogeneous)
      throw std::invalid_argument("saturate_graded: generator not homogeneous");
  // permuted ring with v last
  std::vector<std::string> names;
  std::vector<Int> w;
  for (size_t i = 0; i < R->arity(); ++i)
    if (static_cast<int>(i) != vi) {
      names.push_back(R->name(i));
      w.push_back(weights[i]);
    }
  names.push_back(v);
  w.push_back(weights[static_cast<size_t>(vi)]);
  RingPtr P = make_ring(names);
  std::vector<Poly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.mapped_to(P));
  Ideal G = groebner(Ideal(P, gens), MonomialOrder::grevlex(P->arity(), w), budget);
  size_t vlast = P->arity() - 1;
  std::vector<Poly> out;
  for (const auto& g : G.basis()) {
    unsigned minexp = UINT32_MAX;
    for (const auto& [m, c] : g.terms()) minexp = std::min(minexp, m[vlast]);
    Poly h(P);
    for (const auto& [m, c] : g.terms()) {
      Mono mm = m;
      mm[vlast] -= minexp;
      h.add_term(mm, c);
    }
    out.push_back(h.mapped_to(R));
  }
  return Ideal(R, out);
}

// I  ∩  k[vars not in elim]
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& elim,
                       Budget* budget = nullptr) {
  const RingPtr& R = I.ring();
  std::vector<size_t> idx;
  for (const auto& v : elim) {
    int i = R->index_of(v);
    if (i < 0) throw std::invalid_argument("eliminate: no variable " + v);
    idx.push_back(static_cast<size_t>(i));
  }
  auto ord = MonomialOrder::block(R->arity(), idx);
  Ideal G = groebner(I, ord, budget);
  std::vector<Poly> kept;
  for (const auto& g : G.basis()) {
    bool uses = false;
    for (size_t i : idx) uses = uses || g.uses_variable(i);
    if (!uses) kept.push_back(g);
  }
  // present in the smaller ring
  std::vector<std::string> sub;
  for (size_t i = 0; i < R->arity(); ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) sub.push_back(R->name(i));
  RingPtr S = make_ring(sub);
  std::vector<Poly> out;
  for (const auto& g : kept) out.push_back(g.mapped_to(S));
  return Ideal(S, out);
}

inline Ideal intersect(const Ideal& I, const Ideal& J, Budget* budget = nullptr) {
  const RingPtr& R = I.ring();
  if (R.get() != J.ring().get()) throw std::invalid_argument("intersect: ring mismatch");
  std::vector<std::string> ext_names = {"_u"};
  for (const auto& n : R->names()) ext_names.push_back(n);
  RingPtr E = make_ring(ext_names);
  Poly u = Poly::variable(E, 0);
  Poly one_minus_u = Poly::constant(E, 1) - u;
  std::vector<Poly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(u * g.mapped_to(E));
  for (const auto& g : J.generators())
    if (!g.is_zero()) gens.push_back(one_minus_u * g.mapped_to(E));
  Ideal G = groebner(Ideal(E, gens), MonomialOrder::block(E->arity(), {0}), budget);
  std::vector<Poly> kept;
  for (const auto& g : G.basis())
    if (!g.uses_variable(0)) kept.push_back(g.mapped_to(R));
  return Ideal(R, kept);
}

// I : (g1,...,gk)^infty  =  ∩_i I : gi^infty
inline Ideal saturate_by_ideal(const Ideal& I, const std::vector<std::string>& vars,
                               Budget* budget = nullptr) {
  if (vars.empty()) throw std::invalid_argument("saturate_by_ideal: no variables");
  std::optional<Ideal> acc;
  for (const auto& v : vars) {
    Ideal s = saturate(I, v, budget);
    acc = acc ? intersect(*acc, s, budget) : s;
  }
  return *acc;
}

// Krull dimension of the affine cone via maximal independent sets modulo the
// leading-term ideal; -1 for the unit ideal.
inline int dimension(const Ideal& I, Budget* budget = nullptr) {
  Ideal G = I.has_basis() ? I : groebner(I, MonomialOrder::grevlex(I.ring()->arity()), budget);
  if (G.basis().empty()) return static_cast<int>(I.ring()->arity());
  if (is_unit_ideal(G)) return -1;
  const auto& ord = G.basis_order();
  size_t n = I.ring()->arity();
  std::vector<Mono> leads;
  for (const auto& g : G.basis()) {
    Mono best = g.terms().begin()->first;
    for (const auto& [m, c] : g.terms())
      if (ord.compare(m, best) > 0) best = m;
    leads.push_back(best);
  }
  std::vector<std::vector<size_t>> supports;
  for (const auto& lm : leads) {
    std::vector<size_t> s;
    for (size_t i = 0; i < n; ++i)
      if (lm[i] > 0) s.push_back(i);
    supports.push_back(s);
  }
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& s : supports) {
      bool contained = !s.empty();
      for (size_t i : s)
        if (!(mask & (1u << i))) {
          contained = false;
          break;
        }
      if (s.empty()) contained = true;  // constant lead: unit ideal handled above
      if (contained) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

// f in sqrt(I)?  (Rabinowitsch)
inline bool in_radical(const Ideal& I, const Poly& f, Budget* budget = nullptr) {
  if (f.is_zero()) return true;
  const RingPtr& R = I.ring();
  std::vector<std::string> ext_names = {"_w"};
  for (const auto& n : R->names()) ext_names.push_back(n);
  RingPtr E = make_ring(ext_names);
  std::vector<Poly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.mapped_to(E));
  gens.push_back(Poly::variable(E, 0) * f.mapped_to(E) - Poly::constant(E, 1));
  Ideal G = groebner(Ideal(E, gens), MonomialOrder::grevlex(E->arity()), budget);
  return is_unit_ideal(G);
}

}  // namespace tworay
