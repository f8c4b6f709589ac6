#include "ccs/hilbert.hpp"

#include <algorithm>

namespace ccs {

namespace {

using Poly1 = std::vector<mpz_class>;  // univariate polynomial in T

Poly1 mul1(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void add_shifted(Poly1& a, const Poly1& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

bool is_zero1(const Poly1& a) {
  return std::all_of(a.begin(), a.end(), [](const mpz_class& c) { return c == 0; });
}

mpz_class eval_at_one(const Poly1& a) {
  mpz_class s = 0;
  for (const auto& c : a) s += c;
  return s;
}

Poly1 numerator_rec(std::vector<Monomial> gens, std::size_t arity) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {mpz_class(1)};
  for (const auto& g : gens)
    if (g.is_one()) return {};  // unit ideal: zero series

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
      if (!gens[i].coprime_with(gens[j])) pairwise_coprime = false;
  if (pairwise_coprime) {
    // complete intersection: N = prod (1 - T^deg)
    Poly1 n{mpz_class(1)};
    for (const auto& g : gens) {
      Poly1 f(std::size_t(g.total_degree()) + 1, mpz_class(0));
      f.front() = 1;
      f.back() = -1;
      n = mul1(n, f);
    }
    return n;
  }

  // pivot: most frequent variable among the generators
  std::vector<std::size_t> freq(arity, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < arity; ++v)
      if (g[v]) ++freq[v];
  std::size_t pivot = std::size_t(std::max_element(freq.begin(), freq.end()) - freq.begin());

  std::vector<Monomial> plus;  // I + (x): x plus the x-free generators
  Monomial xv(arity);
  xv[pivot] = 1;
  plus.push_back(xv);
  std::vector<Monomial> colon;  // I : x
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    Monomial h = g;
    if (h[pivot] > 0) h[pivot] = Monomial::Exp(h[pivot] - 1);
    colon.push_back(std::move(h));
  }

  Poly1 n = numerator_rec(std::move(plus), arity);
  add_shifted(n, numerator_rec(std::move(colon), arity), 1);
  return n;
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

HilbertSeries hilbert_numerator(std::vector<Monomial> lt_gens, std::size_t arity) {
  for (const auto& g : lt_gens)
    if (g.arity() != arity) fail(errc::internal_error, "hilbert: monomial arity mismatch");
  return {numerator_rec(std::move(lt_gens), arity), arity};
}

long affine_dimension_from_series(const HilbertSeries& hs) {
  Poly1 n = hs.numerator;
  if (is_zero1(n)) return kDimEmpty;
  std::size_t k = 0;
  while (eval_at_one(n) == 0) {
    // synthetic division by (1 - T)
    Poly1 q(n.size() - 1, mpz_class(0));
    mpz_class carry = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      q[i] = n[i] + carry;
      carry = q[i];
    }
    n = std::move(q);
    ++k;
  }
  return long(hs.arity) - long(k);
}

SchemeMetrics metrics_from_series(const HilbertSeries& hs) {
  Poly1 n = hs.numerator;
  if (is_zero1(n)) return {-1, 0};
  std::size_t k = 0;
  while (eval_at_one(n) == 0) {
    Poly1 q(n.size() - 1, mpz_class(0));
    mpz_class carry = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      q[i] = n[i] + carry;
      carry = q[i];
    }
    n = std::move(q);
    ++k;
  }
  long pole = long(hs.arity) - long(k);
  if (pole <= 0) return {-1, 0};  // at most the cone point: projectively empty
  return {pole - 1, eval_at_one(n)};
}

}  // namespace ccs
