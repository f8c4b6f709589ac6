#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccs/monomial.hpp"
#include "ccs/ring.hpp"

namespace ccs {

// Exact multivariate polynomial: a canonical term list (sorted by the
// storage order on exponent vectors, no zero coefficients).  Monomial orders
// are applied at use sites, so one canonical form serves all orders.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c))
      p.terms_.push_back({Monomial::one(ring->arity()), std::move(c)});
    return p;
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->arity()) fail(errc::unknown_variable, "variable index out of range");
    Monomial m(ring->arity());
    m[index] = 1;
    return monomial(std::move(ring), std::move(m), ring->field.one());
  }

  static Polynomial variable(RingPtr<F> ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) fail(errc::unknown_variable, "unknown variable '" + name + "'");
    return variable(std::move(ring), *idx);
  }

  static Polynomial monomial(RingPtr<F> ring, Monomial m, Elem c) {
    Polynomial p(ring);
    if (m.arity() != ring->arity()) fail(errc::internal_error, "monomial arity mismatch");
    if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  // -1 for the zero polynomial
  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].mono.total_degree();
    for (const auto& t : terms_)
      if (t.mono.total_degree() != d) return false;
    return true;
  }

  bool depends_on(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.mono[var] != 0) return true;
    return false;
  }

  const Term& leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) fail(errc::zero_polynomial, "leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
    return *best;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    const F& k = field();
    Polynomial r(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) r.terms_.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
    r.normalize();
    return r;
  }

  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    // multiplying by a fixed monomial preserves the storage order
    return r;
  }

  Polynomial mul_scalar(const Elem& c) const { return mul_term(Monomial::one(ring_->arity()), c); }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, field().one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Polynomial partial_derivative(std::size_t var) const {
    if (var >= ring_->arity()) fail(errc::unknown_variable, "variable index out of range");
    const F& k = field();
    Polynomial r(ring_);
    for (const auto& t : terms_) {
      if (t.mono[var] == 0) continue;
      Elem c = k.mul(t.coeff, k.from_int(long(t.mono[var])));
      if (k.is_zero(c)) continue;  // characteristic divides the exponent
      Monomial m = t.mono;
      m[var] = Monomial::Exp(m[var] - 1);
      r.terms_.push_back({std::move(m), std::move(c)});
    }
    r.normalize();
    return r;
  }

  Polynomial partial_derivative(const std::string& name) const {
    auto idx = ring_->index_of(name);
    if (!idx) fail(errc::unknown_variable, "unknown variable '" + name + "'");
    return partial_derivative(*idx);
  }

  // substitute var := value, staying in the same ring
  Polynomial substitute(std::size_t var, const Elem& value) const {
    const F& k = field();
    Polynomial r(ring_);
    for (const auto& t : terms_) {
      Elem c = t.coeff;
      Monomial m = t.mono;
      for (Monomial::Exp e = m[var]; e > 0; --e) c = k.mul(c, value);
      m[var] = 0;
      if (!k.is_zero(c)) r.terms_.push_back({std::move(m), std::move(c)});
    }
    r.normalize();
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    const F& k = field();
    Elem acc = k.zero();
    for (const auto& t : terms_) {
      Elem v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (Monomial::Exp e = t.mono[i]; e > 0; --e) v = k.mul(v, point[i]);
      acc = k.add(acc, v);
    }
    return acc;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }

  std::string str() const;

 private:
  Polynomial merged(const Polynomial& o, bool subtract) const {
    require_same_ring(ring_, o.ring_);
    const F& k = field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono < o.terms_[j].mono)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].mono < terms_[i].mono) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        Elem c = subtract ? k.sub(terms_[i].coeff, o.terms_[j].coeff)
                          : k.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!k.is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    const F& k = ring_->field;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = k.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
    }
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <class F>
std::string Polynomial<F>::str() const {
  if (terms_.empty()) return "0";
  const F& k = field();
  // render highest terms first (storage order is ascending)
  std::string out;
  for (std::size_t r = terms_.size(); r-- > 0;) {
    const Term& t = terms_[r];
    std::string c = k.str(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (neg) c = c.substr(1);
    std::string mono;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty())
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += c + "*" + mono;
  }
  return out;
}

// --- ring-changing maps -----------------------------------------------------

// Map a polynomial into another ring: var_map[i] gives the image index of the
// source variable i, or nullopt when that variable must not occur.
template <class F>
Polynomial<F> remap_vars(const Polynomial<F>& p, const RingPtr<F>& new_ring,
                         const std::vector<std::optional<std::size_t>>& var_map) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m(new_ring->arity());
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!var_map[i])
        fail(errc::internal_error, "remap_vars: polynomial uses an unmapped variable");
      m[*var_map[i]] = Monomial::Exp(m[*var_map[i]] + t.mono[i]);
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<F>::from_terms(new_ring, std::move(terms));
}

// Map by variable names: every source variable must exist in the target ring.
template <class F>
Polynomial<F> transport(const Polynomial<F>& p, const RingPtr<F>& new_ring) {
  std::vector<std::optional<std::size_t>> var_map(p.ring()->arity());
  for (std::size_t i = 0; i < p.ring()->arity(); ++i) {
    auto idx = new_ring->index_of(p.ring()->vars[i]);
    if (!idx && p.depends_on(i))
      fail(errc::unknown_variable,
           "variable '" + p.ring()->vars[i] + "' missing from target ring");
    var_map[i] = idx;
  }
  return remap_vars(p, new_ring, var_map);
}

// Homogenize with a fresh variable appended to the ring.  Substituting 1 for
// the new variable restores p.
template <class F>
Polynomial<F> homogenize(const Polynomial<F>& p, const std::string& new_var) {
  const auto& R = p.ring();
  if (R->has_var(new_var))
    fail(errc::invalid_input, "homogenize: '" + new_var + "' is already a ring variable");
  auto vars = R->vars;
  vars.push_back(new_var);
  auto R2 = make_ring<F>(vars, R->field);
  long d = p.total_degree();
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(R2->arity());
    for (std::size_t i = 0; i < t.mono.arity(); ++i) m[i] = t.mono[i];
    m[R2->arity() - 1] = Monomial::Exp(d - t.mono.total_degree());
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<F>::from_terms(R2, std::move(terms));
}

// Substitute value for var and drop it from the ring.
template <class F>
Polynomial<F> dehomogenize(const Polynomial<F>& p, const std::string& var,
                           typename F::Elem value) {
  const auto& R = p.ring();
  auto idx = R->index_of(var);
  if (!idx) fail(errc::unknown_variable, "dehomogenize: unknown variable '" + var + "'");
  Polynomial<F> q = p.substitute(*idx, value);
  std::vector<std::string> vars;
  std::vector<std::optional<std::size_t>> var_map(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i) {
    if (i == *idx) continue;
    var_map[i] = vars.size();
    vars.push_back(R->vars[i]);
  }
  return remap_vars(q, make_ring<F>(vars, R->field), var_map);
}

template <class F>
Polynomial<F> dehomogenize(const Polynomial<F>& p, const std::string& var) {
  return dehomogenize(p, var, p.ring()->field.one());
}

// --- rational-coefficient normal forms ---------------------------------------

// content of a nonzero rational-coefficient polynomial: the positive rational
// c with p/c integer, primitive, and sign matching the storage-leading term
inline mpq_class rational_content(const std::vector<Polynomial<QQ>::Term>& terms) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  mpq_class c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

// p / content(p); leading (highest storage-order) coefficient made positive
inline Polynomial<QQ> primitive_part(const Polynomial<QQ>& p) {
  if (p.is_zero()) return p;
  mpq_class c = rational_content(p.terms());
  if (sgn(p.terms().back().coeff) < 0) c = -c;
  return p.mul_scalar(mpq_class(1) / c);
}

template <class F>
Polynomial<F> primitive_or_monic(const Polynomial<F>& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  if constexpr (std::is_same_v<F, QQ>) {
    (void)ord;
    return primitive_part(p);
  } else {
    return p.mul_scalar(p.field().inv(p.leading_term(ord).coeff));
  }
}

}  // namespace ccs
