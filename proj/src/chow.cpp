#include "ccs/chow.hpp"

namespace ccs {

ChowClass::ChowClass(long n, std::vector<mpq_class> coeffs) : n_(check_dim(n)), c_(std::move(coeffs)) {
  if (c_.size() != std::size_t(n_) + 1)
    fail(errc::invalid_input, "ChowClass: coefficient vector must have length n+1");
}

ChowClass ChowClass::one(long n) {
  ChowClass r(n);
  r.c_[0] = 1;
  return r;
}

ChowClass ChowClass::hyperplane_power(long n, long k) {
  ChowClass r(n);
  if (k >= 0 && k <= n) r.c_[std::size_t(k)] = 1;
  return r;
}

ChowClass ChowClass::from_integers(long n, const std::vector<long>& coeffs) {
  ChowClass r(n);
  for (std::size_t j = 0; j < coeffs.size() && j <= std::size_t(n); ++j) r.c_[j] = coeffs[j];
  return r;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  if (n_ != o.n_) fail(errc::invalid_input, "ChowClass: ambient dimension mismatch");
  ChowClass r(n_);
  for (std::size_t j = 0; j <= std::size_t(n_); ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const { return *this + (-o); }

ChowClass ChowClass::operator-() const {
  ChowClass r(n_);
  for (std::size_t j = 0; j <= std::size_t(n_); ++j) r.c_[j] = -c_[j];
  return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  if (n_ != o.n_) fail(errc::invalid_input, "ChowClass: ambient dimension mismatch");
  ChowClass r(n_);
  for (std::size_t i = 0; i <= std::size_t(n_); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= std::size_t(n_); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

ChowClass ChowClass::mul_scalar(const mpq_class& c) const {
  ChowClass r(*this);
  for (auto& x : r.c_) x *= c;
  return r;
}

ChowClass ChowClass::dual() const {
  ChowClass r(*this);
  for (std::size_t j = 1; j <= std::size_t(n_); j += 2) r.c_[j] = -r.c_[j];
  return r;
}

ChowClass ChowClass::inv_chern_line(long m) const {
  // (1 + mH)^(-1) = sum_k (-m)^k H^k
  ChowClass inv(n_);
  mpq_class p = 1;
  for (std::size_t k = 0; k <= std::size_t(n_); ++k) {
    inv.c_[k] = p;
    p *= -m;
  }
  return *this * inv;
}

ChowClass ChowClass::tensor_line(long m) const {
  ChowClass r(n_);
  ChowClass pow = one(n_);  // (1 + mH)^(-j)
  for (std::size_t j = 0; j <= std::size_t(n_); ++j) {
    if (j > 0) pow = pow.inv_chern_line(m);
    if (sgn(c_[j]) == 0) continue;
    for (std::size_t k = 0; j + k <= std::size_t(n_); ++k) r.c_[j + k] += c_[j] * pow.c_[k];
  }
  return r;
}

ChowClass ChowClass::mul_one_plus_pow(long m, long k) const {
  ChowClass base(n_);
  base.c_[0] = 1;
  if (n_ >= 1) base.c_[1] = m;
  ChowClass r(*this);
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

mpz_class ChowClass::integral() const {
  const mpq_class& a = c_[std::size_t(n_)];
  if (a.get_den() != 1)
    fail(errc::internal_error, "ChowClass: non-integer coefficient of H^n");
  return a.get_num();
}

bool ChowClass::is_integral() const {
  for (const auto& a : c_)
    if (a.get_den() != 1) return false;
  return true;
}

std::vector<mpz_class> ChowClass::integer_coeffs() const {
  std::vector<mpz_class> r;
  r.reserve(c_.size());
  for (const auto& a : c_) {
    if (a.get_den() != 1)
      fail(errc::internal_error, "ChowClass: non-integer coefficient where an integer class was expected");
    r.push_back(a.get_num());
  }
  return r;
}

bool ChowClass::is_zero() const {
  for (const auto& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

std::string ChowClass::str() const {
  std::string out;
  for (std::size_t j = 0; j <= std::size_t(n_); ++j) {
    if (sgn(c_[j]) == 0) continue;
    std::string a = c_[j].get_str();
    bool neg = a[0] == '-';
    if (neg) a = a.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (j == 0)
      out += a;
    else if (j == 1)
      out += a + "*H";
    else
      out += a + "*H^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ccs
