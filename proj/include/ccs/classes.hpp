#pragma once

#include <optional>

#include "ccs/chow.hpp"
#include "ccs/ideal.hpp"

namespace ccs {

// Default seed for the random hyperplane slices; documented in the README so
// published outputs are reproducible.  Results are seed-independent (tested),
// the constant only pins logs bit-for-bit.
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct PipelineOptions {
  std::uint64_t seed = kDefaultSeed;
  long coeff_bound = 997;  // random slice coefficients in [-bound, bound] over Q
  bool simplify = false;   // trim redundant generators before inclusion-exclusion
};

struct ProjectiveDegrees {
  std::vector<mpz_class> g;  // g_0..g_n

  ChowClass to_chow() const {
    ChowClass c(long(g.size()) - 1);
    for (std::size_t j = 0; j < g.size(); ++j) c[j] = mpq_class(g[j]);
    return c;
  }
};

struct ClassReport {
  std::optional<ChowClass> segre, fulton, csm, milnor;
  std::optional<mpz_class> euler;
};

// --- projective degrees (the shadow of the graph) -----------------------------

// g_i = degree of the image in P^n of the i-fold generic target-hyperplane
// section of the graph of the rational map defined by the generators
// (normalized to a common degree).  g_0 = 1.
template <class F>
ProjectiveDegrees projective_degrees(const Ideal<F>& I, const PipelineOptions& opt = {}) {
  if (!I.is_homogeneous())
    fail(errc::non_homogeneous, "projective_degrees: ideal must be homogeneous");
  if (I.is_zero_ideal())
    fail(errc::zero_ideal, "projective_degrees: the zero ideal defines no rational map");
  const long n = long(I.ring->arity()) - 1;

  ProjectiveDegrees out;
  out.g.assign(std::size_t(n) + 1, mpz_class(0));
  out.g[0] = 1;
  if (n == 0) return out;

  Ideal<F> norm = normalize_same_degree(I);
  Ideal<F> J = graph_ideal(norm.gens);
  const std::size_t t_count = norm.gens.size();
  const std::size_t full_arity = J.ring->arity();

  SliceRng rng(opt.seed, I.ring->field.spec(), opt.coeff_bound);
  long dim = affine_dimension(J);
  bool empty = false;

  for (long i = 1; i <= n; ++i) {
    if (!empty) {
      auto [sliced, ell] = slice_once(J, t_count, rng, dim);
      (void)ell;
      auto gb = groebner(sliced);
      if (gb.is_unit()) {
        empty = true;
      } else {
        J = Ideal<F>(sliced.ring, gb.elements);
        dim = affine_dimension_from_series(
            hilbert_numerator(leading_term_ideal(gb), full_arity));
      }
    }
    if (empty) {
      out.g[std::size_t(i)] = 0;
      continue;
    }
    SchemeMetrics m = dim_and_degree(project_to_base(J, t_count));
    if (m.projective_dimension == n - i)
      out.g[std::size_t(i)] = m.degree;
    else if (m.projective_dimension == -1)
      out.g[std::size_t(i)] = 0;
    else
      fail(errc::unexpected_image_dimension,
           "projective_degrees: image has dimension " +
               std::to_string(m.projective_dimension) + " where " +
               std::to_string(n - i) + " or empty was expected");
  }
  return out;
}

// --- Segre and Fulton classes ---------------------------------------------------

// Push-forward to P^n of the Segre class of the scheme the ideal defines.
template <class F>
ChowClass segre(const Ideal<F>& I, const PipelineOptions& opt = {}) {
  if (!I.is_homogeneous()) fail(errc::non_homogeneous, "segre: ideal must be homogeneous");
  if (I.is_zero_ideal()) fail(errc::zero_ideal, "segre: zero ideal");
  const long n = long(I.ring->arity()) - 1;
  if (I.has_constant_generator()) return ChowClass(n);  // empty scheme

  long r = 0;
  for (const auto& g : I.gens) r = std::max(r, g.total_degree());

  ChowClass G = projective_degrees(I, opt).to_chow();
  ChowClass s = ChowClass::one(n) - G.tensor_line(r).inv_chern_line(r);
  if (!s.is_integral()) fail(errc::internal_error, "segre: non-integral class");
  return s;
}

// (1+H)^(n+1) * segre(I): the Chern-Fulton class push-forward.
template <class F>
ChowClass fulton(const Ideal<F>& I, const PipelineOptions& opt = {}) {
  const long n = long(I.ring->arity()) - 1;
  ChowClass c = segre(I, opt).mul_one_plus_pow(1, n + 1);
  if (!c.is_integral()) fail(errc::internal_error, "fulton: non-integral class");
  return c;
}

// --- CSM classes and Euler characteristics --------------------------------------

// CSM class of a hypersurface from the shadow of its gradient graph:
//   (1+H)^(n+1) - sum_d g_d (-H)^d (1+H)^(n-d)
template <class F>
ChowClass csm_hypersurface(const Polynomial<F>& f, const PipelineOptions& opt = {}) {
  if (f.is_zero()) fail(errc::zero_polynomial, "csm_hypersurface: zero polynomial");
  if (!f.is_homogeneous())
    fail(errc::non_homogeneous, "csm_hypersurface: the form must be homogeneous");
  if (f.is_constant())
    fail(errc::invalid_input, "csm_hypersurface: the form must not be a unit");
  const long n = long(f.ring()->arity()) - 1;

  Ideal<F> jac = jacobian_ideal(f);
  if (jac.is_zero_ideal())
    fail(errc::vanishing_jacobian,
         "csm_hypersurface: every partial derivative vanishes (characteristic divides "
         "all exponents)");

  ProjectiveDegrees G = projective_degrees(jac, opt);
  ChowClass c = ChowClass::one(n).mul_one_plus_pow(1, n + 1);
  for (long d = 0; d <= n; ++d) {
    if (G.g[std::size_t(d)] == 0) continue;
    mpq_class coeff(G.g[std::size_t(d)]);
    if (d % 2) coeff = -coeff;  // (-H)^d
    c = c - ChowClass::hyperplane_power(n, d).mul_one_plus_pow(1, n - d).mul_scalar(coeff);
  }
  if (!c.is_integral()) fail(errc::internal_error, "csm_hypersurface: non-integral class");
  return c;
}

// CSM class by inclusion-exclusion over the 2^r - 1 products of generators.
// Every product's slicing seed derives deterministically from (seed, subset),
// so results do not depend on evaluation order.
template <class F>
ChowClass csm(const Ideal<F>& I, const PipelineOptions& opt = {}) {
  if (!I.is_homogeneous()) fail(errc::non_homogeneous, "csm: ideal must be homogeneous");
  const long n = long(I.ring->arity()) - 1;
  if (I.is_zero_ideal()) return ChowClass::one(n).mul_one_plus_pow(1, n + 1);  // all of P^n
  if (I.has_constant_generator()) return ChowClass(n);                         // empty scheme

  Ideal<F> W = opt.simplify ? trim_generators(I) : I;
  const std::size_t r = W.gens.size();
  if (r > 20) fail(errc::unsupported, "csm: too many generators for inclusion-exclusion");

  std::vector<Polynomial<F>> products(std::size_t(1) << r);
  ChowClass total(n);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::uint32_t low = mask & (mask - 1);
    std::size_t bit = std::size_t(__builtin_ctz(mask));
    products[mask] = low == 0 ? W.gens[bit] : products[low] * W.gens[bit];

    PipelineOptions sub = opt;
    sub.seed = mix_seed(opt.seed, mask);
    ChowClass c = csm_hypersurface(products[mask], sub);
    total = (__builtin_popcount(mask) % 2) ? total + c : total - c;
  }
  return total;
}

// Topological Euler characteristic of the support.
template <class F>
mpz_class euler(const Ideal<F>& I, const PipelineOptions& opt = {}) {
  return csm(I, opt).integral();
}

enum class AffineMethod {
  limit,              // chi(S) = chi(closure) - chi(limit scheme at infinity)
  union_at_infinity,  // chi(S) = chi(closure union hyperplane) - n
};

// Euler characteristic of an affine scheme S in A^n given any defining ideal.
template <class F>
mpz_class euler_affine(const Ideal<F>& I, const PipelineOptions& opt = {},
                       AffineMethod method = AffineMethod::limit) {
  if (I.is_zero_ideal()) fail(errc::zero_ideal, "euler_affine: the zero ideal");
  const auto& R = I.ring;
  const long n = long(R->arity());
  for (const auto& g : I.gens)
    if (g.is_unit_constant()) return 0;  // empty scheme

  std::string h = fresh_name(R->vars, "h");
  std::vector<std::string> pvars = R->vars;
  pvars.push_back(h);
  auto Rp = make_ring<F>(pvars, R->field);

  std::vector<Polynomial<F>> hom;
  for (const auto& g : I.gens) hom.push_back(transport(homogenize(g, h), Rp));
  // the closure ideal needs the saturation; homogenized generators alone may
  // cut out extra junk at infinity
  Ideal<F> Ibar = saturate(Ideal<F>(Rp, std::move(hom)),
                           Polynomial<F>::variable(Rp, std::size_t(n)));
  auto gb = groebner(Ibar);
  if (gb.is_unit()) return 0;
  Ibar = Ideal<F>(Rp, gb.elements);

  if (method == AffineMethod::union_at_infinity) {
    auto hp = Polynomial<F>::variable(Rp, std::size_t(n));
    std::vector<Polynomial<F>> gens;
    for (const auto& g : Ibar.gens) gens.push_back(g * hp);
    return euler(Ideal<F>(Rp, std::move(gens)), opt) - n;
  }

  mpz_class chi_bar = euler(Ibar, opt);
  std::vector<Polynomial<F>> limit_gens;
  for (const auto& g : Ibar.gens)
    limit_gens.push_back(dehomogenize(g, h, R->field.zero()));
  RingPtr<F> Rl = limit_gens.empty() ? R : limit_gens.front().ring();
  mpz_class chi_limit = euler(Ideal<F>(Rl, std::move(limit_gens)), opt);
  return chi_bar - chi_limit;
}

// Fulton, CSM and their difference (the Milnor class).
template <class F>
ClassReport milnor(const Ideal<F>& I, const PipelineOptions& opt = {}) {
  ClassReport rep;
  rep.fulton = fulton(I, opt);
  rep.csm = csm(I, opt);
  rep.milnor = *rep.csm - *rep.fulton;
  return rep;
}

// Excess-intersection count: d^n - integral of (1+dH)^n * s for a Segre class
// s in P^n.
inline mpz_class excess_count(const ChowClass& s, long d) {
  if (d < 1) fail(errc::invalid_input, "excess_count: d must be >= 1");
  const long n = s.dim();
  mpz_class dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), unsigned(d), unsigned(n));
  return dn - s.mul_one_plus_pow(d, n).integral();
}

}  // namespace ccs
