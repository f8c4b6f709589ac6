#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ccs/error.hpp"

namespace ccs {

// A class in the Chow ring Z[H]/(H^(n+1)) of P^n: coefficients a_0..a_n of
// a_0 + a_1 H + ... + a_n H^n.  Entries are rational during intermediate
// series manipulations; all final class outputs are asserted integral.
class ChowClass {
 public:
  explicit ChowClass(long n) : n_(check_dim(n)), c_(std::size_t(n) + 1, mpq_class(0)) {}
  ChowClass(long n, std::vector<mpq_class> coeffs);

  static ChowClass one(long n);
  static ChowClass hyperplane_power(long n, long k);  // H^k (0 beyond H^n)
  static ChowClass from_integers(long n, const std::vector<long>& coeffs);

  long dim() const { return n_; }
  const mpq_class& operator[](std::size_t j) const { return c_[j]; }
  mpq_class& operator[](std::size_t j) { return c_[j]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator-() const;
  ChowClass operator*(const ChowClass& o) const;  // truncated mod H^(n+1)
  ChowClass mul_scalar(const mpq_class& c) const;

  bool operator==(const ChowClass& o) const { return n_ == o.n_ && c_ == o.c_; }

  // codimension-j part multiplied by (-1)^j
  ChowClass dual() const;

  // sum_j a_j H^j / (1 + mH)^j, truncated
  ChowClass tensor_line(long m) const;

  // multiply by (1 + mH)^(-1), truncated
  ChowClass inv_chern_line(long m) const;

  // multiply by (1 + mH)^k for k >= 0
  ChowClass mul_one_plus_pow(long m, long k) const;

  // coefficient of H^n; entries must be integral
  mpz_class integral() const;

  bool is_integral() const;
  std::vector<mpz_class> integer_coeffs() const;  // fails on non-integral entries
  bool is_zero() const;

  std::string str() const;  // "3*H^2 - 10*H^3" style (render module reuses this)

 private:
  static long check_dim(long n) {
    if (n < 0) fail(errc::invalid_input, "ChowClass: ambient dimension must be >= 0");
    return n;
  }
  long n_;
  std::vector<mpq_class> c_;
};

}  // namespace ccs
