#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ccs/error.hpp"

namespace ccs {

// Exponent vector of a power product.  The length always matches the arity
// of the ring the monomial lives in; exponents fit comfortably in 16 bits
// for every workload here.
class Monomial {
 public:
  using Exp = std::uint16_t;
  using Vec = boost::container::small_vector<Exp, 16>;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : e_(arity, Exp(0)) {}
  explicit Monomial(Vec e) : e_(std::move(e)) {}
  Monomial(std::initializer_list<Exp> e) : e_(e.begin(), e.end()) {}

  static Monomial one(std::size_t arity) { return Monomial(arity); }

  std::size_t arity() const { return e_.size(); }
  Exp operator[](std::size_t i) const { return e_[i]; }
  Exp& operator[](std::size_t i) { return e_[i]; }
  const Vec& exponents() const { return e_; }

  long total_degree() const {
    long d = 0;
    for (Exp x : e_) d += x;
    return d;
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exp x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = Exp(r.e_[i] + o.e_[i]);
    return r;
  }

  // does *this divide m?
  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  // m / *this, assuming divisibility
  Monomial divide_into(const Monomial& m) const {
    Monomial r(m);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = Exp(r.e_[i] - e_[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  // which variables occur, folded to 32 bits; subset test is a cheap
  // prefilter for divisibility
  std::uint32_t var_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i]) m |= (1u << (i & 31));
    return m;
  }

  // storage/canonical comparison (plain lex on the exponent vector); monomial
  // orders for Groebner work live in MonomialOrder
  auto operator<=>(const Monomial& o) const {
    return std::lexicographical_compare_three_way(e_.begin(), e_.end(), o.e_.begin(),
                                                  o.e_.end());
  }
  bool operator==(const Monomial& o) const { return e_ == o.e_; }

 private:
  Vec e_;
};

// Total, multiplicative well-orders on monomials: lex, grevlex, and block
// elimination orders (front variables dominate; each block compared with its
// own inner order).
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder block(std::vector<std::size_t> front_vars, std::size_t arity,
                             Kind front_inner = Kind::grevlex,
                             Kind back_inner = Kind::grevlex) {
    if (front_inner == Kind::block || back_inner == Kind::block)
      fail(errc::invalid_input, "block order blocks must be lex or grevlex");
    MonomialOrder o(Kind::block);
    o.front_ = std::move(front_vars);
    std::sort(o.front_.begin(), o.front_.end());
    o.front_.erase(std::unique(o.front_.begin(), o.front_.end()), o.front_.end());
    if (!o.front_.empty() && o.front_.back() >= arity)
      fail(errc::invalid_input, "block order variable index out of range");
    for (std::size_t i = 0; i < arity; ++i)
      if (!std::binary_search(o.front_.begin(), o.front_.end(), i)) o.back_.push_back(i);
    o.front_inner_ = front_inner;
    o.back_inner_ = back_inner;
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& front_vars() const { return front_; }

  // > 0 when a comes later (is greater) in the order
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex:
        return cmp_lex_all(a, b);
      case Kind::grevlex:
        return cmp_grevlex_all(a, b);
      case Kind::block: {
        int c = front_inner_ == Kind::lex ? cmp_lex_on(a, b, front_)
                                          : cmp_grevlex_on(a, b, front_);
        if (c != 0) return c;
        return back_inner_ == Kind::lex ? cmp_lex_on(a, b, back_)
                                        : cmp_grevlex_on(a, b, back_);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  static int cmp_lex_all(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  static int cmp_grevlex_all(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    // ties: rightmost difference, smaller exponent wins
    for (std::size_t i = a.arity(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  static int cmp_lex_on(const Monomial& a, const Monomial& b,
                        const std::vector<std::size_t>& idx) {
    for (std::size_t i : idx)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  static int cmp_grevlex_on(const Monomial& a, const Monomial& b,
                            const std::vector<std::size_t>& idx) {
    long da = 0, db = 0;
    for (std::size_t i : idx) da += a[i], db += b[i];
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = idx.size(); k-- > 0;) {
      std::size_t i = idx[k];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  Kind front_inner_ = Kind::grevlex;
  Kind back_inner_ = Kind::grevlex;
  std::vector<std::size_t> front_, back_;
};

}  // namespace ccs
