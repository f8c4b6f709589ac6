#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ccs/error.hpp"

namespace ccs {

// Deterministic Miller-Rabin for n < 2^31.
bool is_prime_u32(std::uint32_t n);

// FieldSpec is the runtime description of a coefficient field; QQ and GFp
// below are the two concrete field types the templated layers instantiate.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      fail(errc::invalid_input, "prime_field modulus must be a prime < 2^31");
    return {Kind::prime, p};
  }
  bool is_rationals() const { return kind == Kind::rationals; }
  bool operator==(const FieldSpec&) const = default;
};

// Exact rationals. mpq_class keeps every value reduced with a positive
// denominator, which is the canonical form the rest of the code relies on.
struct QQ {
  using Elem = mpq_class;
  static constexpr bool cheap_inverse = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_mpz(const mpz_class& v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem neg(const Elem& a) const { return -a; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) fail(errc::zero_divisor, "division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }
  std::string str(const Elem& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  bool operator==(const QQ&) const { return true; }
};

// Prime field GF(p), p < 2^31 so products fit in 64-bit intermediates.
class GFp {
 public:
  using Elem = std::uint32_t;
  static constexpr bool cheap_inverse = true;

  explicit GFp(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      fail(errc::invalid_input, "prime_field modulus must be a prime < 2^31");
  }

  std::uint32_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return p_ == 1 ? 0 : 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? Elem(s - p_) : Elem(s);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return Elem((std::uint64_t(a) * b) % p_); }
  Elem inv(Elem a) const {
    if (a == 0) fail(errc::zero_divisor, "inverse of zero in GF(p)");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += p_;
    return Elem(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_int(long v) const {
    long m = v % long(p_);
    if (m < 0) m += p_;
    return Elem(m);
  }
  Elem from_mpz(const mpz_class& v) const {
    return Elem(mpz_fdiv_ui(v.get_mpz_t(), p_));
  }
  std::string str(Elem a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec::prime_field(p_); }
  bool operator==(const GFp& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// splitmix64: the deterministic generator behind every random choice we make
// (random linear slicing forms, derived per-subset seeds).  Portable across
// platforms, unlike <random> distributions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed ^ (0x94d049bb133111ebULL * (salt + 1));
  return splitmix64(s);
}

}  // namespace ccs
