#pragma once

#include <atomic>
#include <cstdint>
#include <queue>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ccs/polynomial.hpp"

namespace ccs {

// When set, every buchberger() call self-verifies its result (all S-pairs
// and all input generators reduce to zero) and throws on failure.
inline std::atomic<bool>& groebner_certificate_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}
inline void set_groebner_certificate(bool on) { groebner_certificate_flag() = on; }

template <class F>
struct GroebnerBasis {
  RingPtr<F> ring;
  MonomialOrder order;
  std::vector<Polynomial<F>> elements;  // reduced: monic, pairwise irreducible,
                                        // sorted by leading monomial (ascending)

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_unit_constant();
  }
  bool is_zero() const { return elements.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lt;
    lt.reserve(elements.size());
    for (const auto& g : elements) lt.push_back(g.leading_term(order).mono);
    return lt;
  }
};

namespace gb_detail {

template <class F>
struct Prepared {
  std::vector<typename Polynomial<F>::Term> t;  // sorted descending under ord
  Monomial lm;
  typename F::Elem lc;
  std::uint32_t mask = 0;
  long lm_deg = 0;
  bool alive = true;
};

template <class F>
std::vector<typename Polynomial<F>::Term> to_desc(const Polynomial<F>& p,
                                                  const MonomialOrder& ord) {
  auto t = p.terms();
  std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.mono, b.mono);
  });
  return t;
}

template <class F>
Prepared<F> prepare(const Polynomial<F>& p, const MonomialOrder& ord) {
  Prepared<F> r;
  r.t = to_desc(p, ord);
  r.lm = r.t.front().mono;
  r.lc = r.t.front().coeff;
  r.mask = r.lm.var_mask();
  r.lm_deg = r.lm.total_degree();
  return r;
}

// divide out the rational content of a term list; returns the removed factor
inline mpq_class strip_content(std::vector<Polynomial<QQ>::Term>& t) {
  if (t.empty()) return 1;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& x : t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.coeff.get_den().get_mpz_t());
  }
  mpq_class c(num_gcd, den_lcm);
  c.canonicalize();
  if (c == 1) return 1;
  mpq_class inv = 1 / c;
  for (auto& x : t) x.coeff *= inv;
  return c;
}

// The reduction engine.  Over GF(p) steps divide by the reducer's leading
// coefficient directly; over Q they are fraction-free (W := a*W - b*m*g on
// integer coefficients) with the accumulated scale tracked so the exact
// remainder can be recovered.
template <class F>
class Reducer {
 public:
  using Term = typename Polynomial<F>::Term;
  using Elem = typename F::Elem;

  Reducer(const F& field, const MonomialOrder& ord, const std::vector<Prepared<F>>& basis)
      : k_(field), ord_(ord), basis_(basis) {}

  // full normal form; `exclude` skips one basis index (for inter-reduction)
  Polynomial<F> reduce(const Polynomial<F>& p, std::size_t exclude = SIZE_MAX) const {
    if (p.is_zero()) return p;
    std::vector<Term> w = to_desc(p, ord_);
    std::vector<Term> rem;
    std::vector<mpq_class> rem_scale;  // QQ only: scale at emission time

    mpq_class lambda = 1;
    if constexpr (std::is_same_v<F, QQ>) {
      mpq_class c0 = strip_content(w);
      lambda = 1 / c0;
    }

    int steps_since_strip = 0;
    std::size_t start = 0;  // w[0..start) holds emitted (irreducible) terms
    while (start < w.size()) {
      const Monomial& head = w[start].mono;
      std::size_t gi = find_reducer(head, exclude);
      if (gi == SIZE_MAX) {
        rem.push_back(std::move(w[start]));
        if constexpr (std::is_same_v<F, QQ>) rem_scale.push_back(lambda);
        ++start;
        continue;
      }
      const Prepared<F>& g = basis_[gi];
      Monomial m = g.lm.divide_into(head);
      if constexpr (std::is_same_v<F, QQ>) {
        pseudo_step(w, start, g, m, lambda);
        start = 0;
        if (++steps_since_strip >= 8) {
          lambda /= strip_tail_content(w, start);
          steps_since_strip = 0;
        }
      } else {
        exact_step(w, start, g, m);
        start = 0;
      }
    }

    if constexpr (std::is_same_v<F, QQ>) {
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i].coeff /= rem_scale[i];
    }
    return Polynomial<F>::from_terms(p.ring(), std::move(rem));
  }

  bool reduces_to_zero(const Polynomial<F>& p) const { return reduce(p).is_zero(); }

 private:
  std::size_t find_reducer(const Monomial& m, std::size_t exclude) const {
    std::uint32_t mask = m.var_mask();
    long deg = m.total_degree();
    std::size_t best = SIZE_MAX, best_terms = SIZE_MAX;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i == exclude) continue;
      const Prepared<F>& g = basis_[i];
      if (g.lm_deg > deg || (g.mask & ~mask) != 0) continue;
      if (!g.lm.divides(m)) continue;
      if (g.t.size() < best_terms) {
        best = i;
        best_terms = g.t.size();
      }
    }
    return best;
  }

  // tail := a*tail - b*(m*g) on w[start..], a = lc(g), b = coefficient of
  // w[start]; the head cancels; w is replaced by the new tail
  void pseudo_step(std::vector<Term>& w, std::size_t start, const Prepared<F>& g,
                   const Monomial& m, mpq_class& lambda) const {
    const mpq_class a = g.lc;
    const mpq_class b = w[start].coeff;
    lambda *= a;
    std::vector<Term> out;
    out.reserve(w.size() - start + g.t.size());
    std::size_t i = start + 1, j = 1;  // heads cancel by construction
    while (i < w.size() || j < g.t.size()) {
      if (j == g.t.size()) {
        out.push_back({std::move(w[i].mono), w[i].coeff * a});
        ++i;
        continue;
      }
      Monomial gm = g.t[j].mono * m;
      int c = i < w.size() ? ord_.cmp(w[i].mono, gm) : -1;
      if (c > 0) {
        out.push_back({std::move(w[i].mono), w[i].coeff * a});
        ++i;
      } else if (c < 0) {
        out.push_back({std::move(gm), -b * g.t[j].coeff});
        ++j;
      } else {
        mpq_class v = w[i].coeff * a - b * g.t[j].coeff;
        if (sgn(v) != 0) out.push_back({std::move(gm), std::move(v)});
        ++i, ++j;
      }
    }
    w = std::move(out);
  }

  // tail := tail - (b/a)*(m*g) on w[start..] over GF(p)
  void exact_step(std::vector<Term>& w, std::size_t start, const Prepared<F>& g,
                  const Monomial& m) const {
    Elem c = k_.div(w[start].coeff, g.lc);
    std::vector<Term> out;
    out.reserve(w.size() - start + g.t.size());
    std::size_t i = start + 1, j = 1;
    while (i < w.size() || j < g.t.size()) {
      if (j == g.t.size()) {
        out.push_back(std::move(w[i++]));
        continue;
      }
      Monomial gm = g.t[j].mono * m;
      int cc = i < w.size() ? ord_.cmp(w[i].mono, gm) : -1;
      if (cc > 0) {
        out.push_back(std::move(w[i++]));
      } else if (cc < 0) {
        out.push_back({std::move(gm), k_.neg(k_.mul(c, g.t[j].coeff))});
        ++j;
      } else {
        Elem v = k_.sub(w[i].coeff, k_.mul(c, g.t[j].coeff));
        if (!k_.is_zero(v)) out.push_back({std::move(gm), std::move(v)});
        ++i, ++j;
      }
    }
    w = std::move(out);
  }

  static mpq_class strip_tail_content(std::vector<Term>& w, std::size_t start) {
    if constexpr (std::is_same_v<F, QQ>) {
      if (start != 0 || w.empty()) return 1;  // only strip whole tails
      return strip_content(w);
    } else {
      return 1;
    }
  }

  const F& k_;
  const MonomialOrder& ord_;
  const std::vector<Prepared<F>>& basis_;
};

// cross-multiplied S-polynomial of prepared polys (any nonzero scalar
// multiple of the textbook S-polynomial serves the algorithm)
template <class F>
Polynomial<F> spoly(const F& k, const RingPtr<F>& ring, const MonomialOrder& ord,
                    const Prepared<F>& f, const Prepared<F>& g) {
  Monomial L = Monomial::lcm(f.lm, g.lm);
  Monomial mf = f.lm.divide_into(L), mg = g.lm.divide_into(L);
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(f.t.size() + g.t.size());
  for (const auto& t : f.t) terms.push_back({t.mono * mf, k.mul(t.coeff, g.lc)});
  for (const auto& t : g.t) terms.push_back({t.mono * mg, k.neg(k.mul(t.coeff, f.lc))});
  (void)ord;
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace gb_detail

// Remainder of multivariate division: no term of the result is divisible by
// any leading monomial of `basis`, and p minus the result lies in the ideal
// generated by `basis`.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& ord) {
  std::vector<gb_detail::Prepared<F>> prep;
  for (const auto& b : basis) {
    require_same_ring(p.ring(), b.ring());
    if (!b.is_zero()) prep.push_back(gb_detail::prepare(b, ord));
  }
  return gb_detail::Reducer<F>(p.field(), ord, prep).reduce(p);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_polynomial, "s_polynomial of zero polynomial");
  require_same_ring(f.ring(), g.ring());
  const F& k = f.field();
  auto lf = f.leading_term(ord), lg = g.leading_term(ord);
  Monomial L = Monomial::lcm(lf.mono, lg.mono);
  return f.mul_term(lf.mono.divide_into(L), k.inv(lf.coeff)) -
         g.mul_term(lg.mono.divide_into(L), k.inv(lg.coeff));
}

template <class F>
bool verify_groebner(const GroebnerBasis<F>& gb, const std::vector<Polynomial<F>>& gens);

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// degree first) and Buchberger's coprimality and chain criteria.  Returns the
// reduced basis, which is unique for a given ideal and order.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder ord,
                            RingPtr<F> ring) {
  using gb_detail::Prepared;
  const F& k = ring->field;

  std::vector<Polynomial<F>> input;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) input.push_back(primitive_or_monic(g, ord));
  }

  GroebnerBasis<F> out{ring, ord, {}};
  std::vector<Prepared<F>> basis;

  struct PairEntry {
    long deg;
    Monomial lcm;
    std::uint32_t i, j;
  };
  auto pair_later = [&](const PairEntry& a, const PairEntry& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };
  std::priority_queue<PairEntry, std::vector<PairEntry>, decltype(pair_later)> queue(
      pair_later);
  std::unordered_set<std::uint64_t> pending;
  auto key = [](std::uint32_t i, std::uint32_t j) {
    return (std::uint64_t(std::min(i, j)) << 32) | std::max(i, j);
  };

  auto add_element = [&](Polynomial<F> p) {
    Prepared<F> pr = gb_detail::prepare(p, ord);
    std::uint32_t idx = std::uint32_t(basis.size());
    for (std::uint32_t e = 0; e < idx; ++e) {
      // keep the leading monomials of the survivors pairwise non-divisible;
      // on equal lms only the newcomer is retired
      if (basis[e].alive && basis[e].lm.divides(pr.lm)) pr.alive = false;
      if (pr.lm.divides(basis[e].lm) && !(pr.lm == basis[e].lm)) basis[e].alive = false;
      Monomial L = Monomial::lcm(basis[e].lm, pr.lm);
      queue.push({L.total_degree(), L, e, idx});
      pending.insert(key(e, idx));
    }
    basis.push_back(std::move(pr));
  };

  for (auto& g : input) add_element(g);

  gb_detail::Reducer<F> red(k, ord, basis);
  while (!queue.empty()) {
    PairEntry pe = queue.top();
    queue.pop();
    pending.erase(key(pe.i, pe.j));
    const Prepared<F>& f = basis[pe.i];
    const Prepared<F>& g = basis[pe.j];
    // coprime leading monomials: S-polynomial reduces to zero
    if (pe.lcm.total_degree() == f.lm_deg + g.lm_deg && f.lm.coprime_with(g.lm)) continue;
    // chain criterion
    bool skip = false;
    for (std::uint32_t e = 0; e < basis.size() && !skip; ++e) {
      if (e == pe.i || e == pe.j) continue;
      if ((basis[e].mask & ~pe.lcm.var_mask()) != 0) continue;
      if (!basis[e].lm.divides(pe.lcm)) continue;
      if (!pending.count(key(pe.i, e)) && !pending.count(key(pe.j, e))) skip = true;
    }
    if (skip) continue;

    Polynomial<F> s = gb_detail::spoly(k, ring, ord, f, g);
    Polynomial<F> r = red.reduce(s);
    if (!r.is_zero()) add_element(primitive_or_monic(r, ord));
  }

  // minimalize: keep elements whose lm is not divisible by another survivor
  std::vector<Prepared<F>> minimal;
  for (auto& b : basis)
    if (b.alive) minimal.push_back(std::move(b));

  // inter-reduce tails until stable (heads are pairwise irreducible by now)
  gb_detail::Reducer<F> mred(k, ord, minimal);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Polynomial<F> p =
          Polynomial<F>::from_terms(ring, std::vector(minimal[i].t.begin(), minimal[i].t.end()));
      Polynomial<F> r = mred.reduce(p, i);
      r = primitive_or_monic(r, ord);
      if (r.is_zero()) fail(errc::internal_error, "buchberger: minimal element vanished");
      if (!(r == p)) {
        minimal[i] = gb_detail::prepare(r, ord);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Prepared<F>& a, const Prepared<F>& b) { return ord.less(a.lm, b.lm); });
  for (auto& m : minimal) {
    Polynomial<F> p =
        Polynomial<F>::from_terms(ring, std::vector(m.t.begin(), m.t.end()));
    // reduced basis elements are monic
    out.elements.push_back(p.mul_scalar(k.inv(p.leading_term(ord).coeff)));
  }

  if (groebner_certificate_flag() && !verify_groebner(out, gens))
    fail(errc::internal_error, "Groebner certificate failed");
  return out;
}

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder ord) {
  if (gens.empty()) fail(errc::invalid_input, "buchberger: cannot infer ring");
  return buchberger(gens, std::move(ord), gens.front().ring());
}

// Certificate: every pairwise S-polynomial and every original generator
// reduces to zero modulo the basis.
template <class F>
bool verify_groebner(const GroebnerBasis<F>& gb, const std::vector<Polynomial<F>>& gens) {
  std::vector<gb_detail::Prepared<F>> prep;
  for (const auto& e : gb.elements) prep.push_back(gb_detail::prepare(e, gb.order));
  gb_detail::Reducer<F> red(gb.ring->field, gb.order, prep);
  for (std::size_t i = 0; i < prep.size(); ++i)
    for (std::size_t j = i + 1; j < prep.size(); ++j) {
      auto s = gb_detail::spoly(gb.ring->field, gb.ring, gb.order, prep[i], prep[j]);
      if (!red.reduces_to_zero(s)) return false;
    }
  for (const auto& g : gens)
    if (!red.reduces_to_zero(g)) return false;
  return true;
}

// Minimal monomial generators of the initial ideal of a reduced basis.
template <class F>
std::vector<Monomial> leading_term_ideal(const GroebnerBasis<F>& gb) {
  std::vector<Monomial> lt = gb.leading_monomials();
  std::vector<Monomial> min;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lt.size() && !redundant; ++j)
      if (j != i && lt[j].divides(lt[i]) && !(lt[j] == lt[i] && j > i)) redundant = true;
    if (!redundant) min.push_back(lt[i]);
  }
  std::sort(min.begin(), min.end());
  return min;
}

}  // namespace ccs
