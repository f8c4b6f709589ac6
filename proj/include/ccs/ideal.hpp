#pragma once

#include <optional>
#include <utility>

#include "ccs/groebner.hpp"
#include "ccs/hilbert.hpp"

namespace ccs {

template <class F>
struct Ideal {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;  // nonzero; zero generators are dropped

  Ideal() = default;
  Ideal(RingPtr<F> r, std::vector<Polynomial<F>> g) : ring(std::move(r)) {
    gens.reserve(g.size());
    for (auto& p : g) {
      require_same_ring(ring, p.ring());
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }

  static Ideal zero(RingPtr<F> r) { return Ideal(std::move(r), {}); }

  bool is_zero_ideal() const { return gens.empty(); }

  bool has_constant_generator() const {
    for (const auto& g : gens)
      if (g.is_unit_constant()) return true;
    return false;
  }

  bool is_homogeneous() const {
    for (const auto& g : gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }
};

template <class F>
GroebnerBasis<F> groebner(const Ideal<F>& I, MonomialOrder ord) {
  return buchberger(I.gens, std::move(ord), I.ring);
}

template <class F>
GroebnerBasis<F> groebner(const Ideal<F>& I) {
  return groebner(I, MonomialOrder::grevlex());
}

// Ideal from the reduced grevlex basis: a canonical generating set, also used
// to decide ideal equality.
template <class F>
Ideal<F> canonicalize(const Ideal<F>& I) {
  auto gb = groebner(I);
  return Ideal<F>(I.ring, gb.elements);
}

template <class F>
bool equal_ideals(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a.ring, b.ring);
  return groebner(a).elements == groebner(b).elements;
}

// membership via a precomputed basis
template <class F>
bool reduces_to_zero(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  return normal_form(p, gb.elements, gb.order).is_zero();
}

// --- variable bookkeeping -----------------------------------------------------

// new ring with `names` inserted before the existing variables
template <class F>
RingPtr<F> prepend_vars(const RingPtr<F>& R, const std::vector<std::string>& names) {
  std::vector<std::string> vars = names;
  vars.insert(vars.end(), R->vars.begin(), R->vars.end());
  return make_ring<F>(vars, R->field);
}

// generators transported to a ring that contains all source variables
template <class F>
std::vector<Polynomial<F>> transport_gens(const std::vector<Polynomial<F>>& gens,
                                          const RingPtr<F>& R2) {
  std::vector<Polynomial<F>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(transport(g, R2));
  return out;
}

// --- elimination, intersection, quotient, saturation -------------------------

// I intersect k[remaining vars], computed from a Groebner basis under a block
// order with the eliminated variables in front; the result lives in the ring
// of the remaining variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, std::vector<std::size_t> vars) {
  const auto& R = I.ring;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (!vars.empty() && vars.back() >= R->arity())
    fail(errc::unknown_variable, "eliminate: variable index out of range");
  if (vars.size() >= R->arity())
    fail(errc::invalid_input, "eliminate: cannot eliminate every variable");

  std::vector<std::string> rem_names;
  std::vector<std::optional<std::size_t>> var_map(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i) {
    if (std::binary_search(vars.begin(), vars.end(), i)) continue;
    var_map[i] = rem_names.size();
    rem_names.push_back(R->vars[i]);
  }
  auto R2 = make_ring<F>(rem_names, R->field);

  auto gb = groebner(I, MonomialOrder::block(vars, R->arity()));
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.elements) {
    bool uses = false;
    for (std::size_t v : vars) uses = uses || g.depends_on(v);
    if (!uses) kept.push_back(remap_vars(g, R2, var_map));
  }
  return Ideal<F>(R2, std::move(kept));
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    auto i = I.ring->index_of(n);
    if (!i) fail(errc::unknown_variable, "eliminate: unknown variable '" + n + "'");
    idx.push_back(*i);
  }
  return eliminate(I, std::move(idx));
}

// I cap J via the auxiliary-variable trick: eliminate t from t*I + (1-t)*J.
template <class F>
Ideal<F> intersect(const Ideal<F>& A, const Ideal<F>& B) {
  require_same_ring(A.ring, B.ring);
  if (A.is_zero_ideal() || B.is_zero_ideal()) return Ideal<F>::zero(A.ring);
  if (A.has_constant_generator()) return B;
  if (B.has_constant_generator()) return A;

  const auto& R = A.ring;
  std::string aux = fresh_name(R->vars, "t");
  auto R2 = prepend_vars(R, {aux});
  auto t = Polynomial<F>::variable(R2, std::size_t(0));
  auto one_minus_t = Polynomial<F>::constant(R2, R->field.one()) - t;

  std::vector<Polynomial<F>> gens;
  for (const auto& a : A.gens) gens.push_back(t * transport(a, R2));
  for (const auto& b : B.gens) gens.push_back(one_minus_t * transport(b, R2));

  Ideal<F> J(R2, std::move(gens));
  Ideal<F> E = eliminate(J, std::vector<std::size_t>{0});
  // eliminate() already rebuilt the original ring; keep the caller's pointer
  return Ideal<F>(R, transport_gens(E.gens, R));
}

// exact division p / g, or nullopt when g does not divide p
template <class F>
std::optional<Polynomial<F>> try_divide(const Polynomial<F>& p, const Polynomial<F>& g,
                                        const MonomialOrder& ord) {
  if (g.is_zero()) fail(errc::zero_divisor, "division by the zero polynomial");
  const F& k = p.field();
  auto lg = g.leading_term(ord);
  Polynomial<F> rem = p;
  Polynomial<F> quot(p.ring());
  while (!rem.is_zero()) {
    auto lt = rem.leading_term(ord);
    if (!lg.mono.divides(lt.mono)) return std::nullopt;
    auto q = Polynomial<F>::monomial(p.ring(), lg.mono.divide_into(lt.mono),
                                     k.div(lt.coeff, lg.coeff));
    quot = quot + q;
    rem = rem - q * g;
  }
  return quot;
}

// colon ideal I : g = (I cap (g)) / g
template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Polynomial<F>& g) {
  require_same_ring(I.ring, g.ring());
  if (g.is_zero()) fail(errc::zero_divisor, "quotient by the zero polynomial");
  if (I.is_zero_ideal()) return I;
  if (g.is_unit_constant()) return I;
  Ideal<F> J = intersect(I, Ideal<F>(I.ring, {g}));
  std::vector<Polynomial<F>> gens;
  for (const auto& p : J.gens) {
    auto q = try_divide(p, g, MonomialOrder::grevlex());
    if (!q) fail(errc::internal_error, "quotient: generator not divisible");
    gens.push_back(std::move(*q));
  }
  return Ideal<F>(I.ring, std::move(gens));
}

// I : J = intersection over the generators of J
template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Ideal<F>& J) {
  require_same_ring(I.ring, J.ring);
  if (J.is_zero_ideal()) fail(errc::zero_divisor, "quotient by the zero ideal");
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.gens) {
    Ideal<F> q = quotient(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

namespace sat_detail {

// ring with variable `var` moved to the end (grevlex then makes it smallest)
template <class F>
Ideal<F> move_var_last(const Ideal<F>& I, std::size_t var, std::size_t& new_pos) {
  const auto& R = I.ring;
  std::vector<std::string> vars;
  std::vector<std::optional<std::size_t>> var_map(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i) {
    if (i == var) continue;
    var_map[i] = vars.size();
    vars.push_back(R->vars[i]);
  }
  var_map[var] = vars.size();
  vars.push_back(R->vars[var]);
  new_pos = vars.size() - 1;
  auto R2 = make_ring<F>(vars, R->field);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.gens) gens.push_back(remap_vars(g, R2, var_map));
  return Ideal<F>(R2, std::move(gens));
}

}  // namespace sat_detail

// I : g^inf for a single polynomial g.
//
// When g is a variable and I is homogeneous this divides variable powers out
// of a grevlex basis computed with that variable smallest; otherwise it falls
// back to the Rabinowitsch trick (adjoin y, add 1 - y*g, eliminate y).
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& g) {
  require_same_ring(I.ring, g.ring());
  if (g.is_zero()) fail(errc::zero_divisor, "saturation by the zero polynomial");
  if (I.is_zero_ideal() || g.is_unit_constant() || I.has_constant_generator()) return I;

  const auto& R = I.ring;
  std::optional<std::size_t> var;
  if (g.term_count() == 1 && g.terms()[0].mono.total_degree() == 1)
    for (std::size_t i = 0; i < R->arity(); ++i)
      if (g.terms()[0].mono[i] == 1) var = i;

  if (var && I.is_homogeneous()) {
    std::size_t pos = 0;
    Ideal<F> J = sat_detail::move_var_last(I, *var, pos);
    auto gb = groebner(J);
    std::vector<Polynomial<F>> out;
    for (const auto& e : gb.elements) {
      Monomial::Exp low = std::numeric_limits<Monomial::Exp>::max();
      for (const auto& t : e.terms()) low = std::min(low, t.mono[pos]);
      if (low == 0) {
        out.push_back(e);
        continue;
      }
      Monomial d(J.ring->arity());
      d[pos] = low;
      std::vector<typename Polynomial<F>::Term> terms;
      for (const auto& t : e.terms()) terms.push_back({d.divide_into(t.mono), t.coeff});
      out.push_back(Polynomial<F>::from_terms(J.ring, std::move(terms)));
    }
    return Ideal<F>(R, transport_gens(out, R));
  }

  std::string y = fresh_name(R->vars, "y");
  auto R2 = prepend_vars(R, {y});
  std::vector<Polynomial<F>> gens = transport_gens(I.gens, R2);
  gens.push_back(Polynomial<F>::constant(R2, R->field.one()) -
                 Polynomial<F>::variable(R2, std::size_t(0)) * transport(g, R2));
  Ideal<F> E = eliminate(Ideal<F>(R2, std::move(gens)), std::vector<std::size_t>{0});
  return Ideal<F>(R, transport_gens(E.gens, R));
}

// I : J^inf = intersection of the single-generator saturations.  Equal pieces
// are deduplicated through their reduced bases before intersecting.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J) {
  require_same_ring(I.ring, J.ring);
  if (J.is_zero_ideal()) fail(errc::zero_divisor, "saturation by the zero ideal");
  if (I.is_zero_ideal()) return I;

  std::vector<Ideal<F>> pieces;
  for (const auto& g : J.gens) {
    Ideal<F> s = canonicalize(saturate(I, g));
    bool dup = false;
    for (const auto& p : pieces) dup = dup || p.gens == s.gens;
    if (!dup) pieces.push_back(std::move(s));
  }
  Ideal<F> acc = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) acc = intersect(acc, pieces[i]);
  return acc;
}

// --- dimension and degree ------------------------------------------------------

template <class F>
long affine_dimension(const Ideal<F>& I) {
  if (I.is_zero_ideal()) return long(I.ring->arity());
  auto gb = groebner(I);
  if (gb.is_unit()) return kDimEmpty;
  return affine_dimension_from_series(hilbert_numerator(leading_term_ideal(gb), I.ring->arity()));
}

// Projective dimension and degree of the scheme a homogeneous ideal defines.
template <class F>
SchemeMetrics dim_and_degree(const Ideal<F>& I) {
  if (!I.is_homogeneous())
    fail(errc::non_homogeneous, "dim_and_degree: ideal must be homogeneous");
  if (I.is_zero_ideal()) return {long(I.ring->arity()) - 1, 1};
  auto gb = groebner(I);
  if (gb.is_unit()) return {-1, 0};
  return metrics_from_series(hilbert_numerator(leading_term_ideal(gb), I.ring->arity()));
}

// --- the graph-ideal construction and slicing ----------------------------------

// Bihomogeneous ideal of the graph of the rational map defined by f_0..f_N
// (equal-degree homogeneous forms): adjoin u, form (t_i - u*f_i), eliminate u.
// In the resulting ring the t-variables come first, then the source ring's.
template <class F>
Ideal<F> graph_ideal(const std::vector<Polynomial<F>>& f) {
  if (f.empty()) fail(errc::invalid_input, "graph_ideal: empty map");
  const auto& R = f.front().ring();
  long deg = -1;
  bool any_nonzero = false;
  for (const auto& fi : f) {
    require_same_ring(R, fi.ring());
    if (fi.is_zero()) continue;
    if (!fi.is_homogeneous())
      fail(errc::non_homogeneous, "graph_ideal: map components must be homogeneous");
    if (deg >= 0 && fi.total_degree() != deg)
      fail(errc::degree_mismatch, "graph_ideal: map components must share one degree");
    deg = fi.total_degree();
    any_nonzero = true;
  }
  if (!any_nonzero) fail(errc::invalid_input, "graph_ideal: all map components are zero");

  auto tnames = fresh_names(R->vars, "t", f.size());
  std::vector<std::string> taken = R->vars;
  taken.insert(taken.end(), tnames.begin(), tnames.end());
  std::string u = fresh_name(taken, "u");

  std::vector<std::string> uvars{u};
  uvars.insert(uvars.end(), tnames.begin(), tnames.end());
  auto Ru = prepend_vars(R, uvars);

  auto up = Polynomial<F>::variable(Ru, std::size_t(0));
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < f.size(); ++i)
    gens.push_back(Polynomial<F>::variable(Ru, 1 + i) - up * transport(f[i], Ru));
  return eliminate(Ideal<F>(Ru, std::move(gens)), std::vector<std::size_t>{0});
}

// Reproducible source of random linear forms for hyperplane slicing.
struct SliceRng {
  std::uint64_t state;
  FieldSpec field;
  long coeff_bound;  // Q: coefficients uniform in [-bound, bound]

  explicit SliceRng(std::uint64_t seed, FieldSpec fs = FieldSpec::rationals(),
                    long bound = 997)
      : state(seed), field(fs), coeff_bound(bound) {}

  long next_int() {
    if (field.is_rationals()) {
      std::uint64_t span = std::uint64_t(2 * coeff_bound + 1);
      return long(splitmix64(state) % span) - coeff_bound;
    }
    return long(splitmix64(state) % field.p);
  }
};

// random linear form in the given variables (not all coefficients zero)
template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& R, std::size_t first_var,
                                 std::size_t count, SliceRng& rng) {
  while (true) {
    std::vector<typename Polynomial<F>::Term> terms;
    bool nonzero = false;
    for (std::size_t i = 0; i < count; ++i) {
      long c = rng.next_int();
      if (c == 0) continue;
      Monomial m(R->arity());
      m[first_var + i] = 1;
      terms.push_back({std::move(m), R->field.from_int(c)});
      nonzero = true;
    }
    if (nonzero) return Polynomial<F>::from_terms(R, std::move(terms));
  }
}

inline constexpr int kSliceRetryBudget = 25;

// One generic hyperplane section of a bihomogeneous ideal (t-variables first):
// add a random linear form in the t-variables, check that the affine dimension
// drops by exactly one, then saturate away components supported on the
// irrelevant ideal (t_0..t_N).  Returns the sliced ideal and the accepted form.
template <class F>
std::pair<Ideal<F>, Polynomial<F>> slice_once(const Ideal<F>& J_prev, std::size_t t_count,
                                              SliceRng& rng,
                                              std::optional<long> known_dim = std::nullopt) {
  const auto& R = J_prev.ring;
  if (t_count == 0 || t_count > R->arity())
    fail(errc::invalid_input, "slice_once: bad t-variable count");
  long dim_prev = known_dim ? *known_dim : affine_dimension(J_prev);
  if (dim_prev == kDimEmpty)
    fail(errc::invalid_input, "slice_once: cannot slice the empty scheme");

  std::vector<Polynomial<F>> tvars;
  for (std::size_t i = 0; i < t_count; ++i)
    tvars.push_back(Polynomial<F>::variable(R, i));
  Ideal<F> irrelevant(R, tvars);

  for (int attempt = 0; attempt < kSliceRetryBudget; ++attempt) {
    Polynomial<F> ell = random_linear_form(R, 0, t_count, rng);
    std::vector<Polynomial<F>> gens = J_prev.gens;
    gens.push_back(ell);
    Ideal<F> K(R, std::move(gens));
    if (affine_dimension(K) != dim_prev - 1) continue;
    return {saturate(K, irrelevant), ell};
  }
  fail(errc::genericity_failure,
       "slice_once: no generic hyperplane found within the retry budget");
}

// Homogeneous ideal of the projection to the base P^n: eliminate the
// t-variables.
template <class F>
Ideal<F> project_to_base(const Ideal<F>& J, std::size_t t_count) {
  std::vector<std::size_t> tv(t_count);
  for (std::size_t i = 0; i < t_count; ++i) tv[i] = i;
  return eliminate(J, std::move(tv));
}

// --- generator normalization and jacobians --------------------------------------

// Make every generator degree r (default: the maximum generator degree) by
// multiplying lower-degree generators with pure variable powers; the result
// cuts out the same scheme.
template <class F>
Ideal<F> normalize_same_degree(const Ideal<F>& I, std::optional<long> target = std::nullopt) {
  if (!I.is_homogeneous())
    fail(errc::non_homogeneous, "normalize_same_degree: generators must be homogeneous");
  long r = 0;
  for (const auto& g : I.gens) r = std::max(r, g.total_degree());
  if (target) {
    if (*target < r)
      fail(errc::invalid_input, "normalize_same_degree: target degree below a generator degree");
    r = *target;
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.gens) {
    long d = g.total_degree();
    if (d == r) {
      gens.push_back(g);
      continue;
    }
    for (std::size_t v = 0; v < I.ring->arity(); ++v) {
      Monomial m(I.ring->arity());
      m[v] = Monomial::Exp(r - d);
      gens.push_back(g.mul_term(m, I.ring->field.one()));
    }
  }
  return Ideal<F>(I.ring, std::move(gens));
}

// (dF/dx_0, ..., dF/dx_n); vanishing partials are dropped by the constructor
template <class F>
Ideal<F> jacobian_ideal(const Polynomial<F>& f) {
  if (!f.is_homogeneous())
    fail(errc::non_homogeneous, "jacobian_ideal: the form must be homogeneous");
  std::vector<Polynomial<F>> gens;
  for (std::size_t v = 0; v < f.ring()->arity(); ++v)
    gens.push_back(f.partial_derivative(v));
  return Ideal<F>(f.ring(), std::move(gens));
}

// Drop generators that lie in the ideal of the others (optional pre-pass).
template <class F>
Ideal<F> trim_generators(const Ideal<F>& I) {
  std::vector<Polynomial<F>> kept = I.gens;
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (others.empty()) break;
    auto gb = buchberger(others, MonomialOrder::grevlex(), I.ring);
    if (reduces_to_zero(kept[i], gb)) kept.erase(kept.begin() + long(i));
  }
  return Ideal<F>(I.ring, std::move(kept));
}

}  // namespace ccs
