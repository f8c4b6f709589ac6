#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccs/ideal.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace ccs;
using testing::qideal;
using testing::qpoly;

TEST_CASE("eliminate examples") {
  // eliminate u from (t0 - u z0, t1 - u z1): the P^1 graph relation
  auto I = qideal("t0 - u*z0, t1 - u*z1", {"u", "t0", "t1", "z0", "z1"});
  auto E = eliminate(I, std::vector<std::string>{"u"});
  CHECK(equal_ideals(E, qideal("z0*t1 - z1*t0", {"t0", "t1", "z0", "z1"})));

  auto E2 = eliminate(qideal("x-y, y-z", {"x", "y", "z"}), std::vector<std::string>{"y"});
  CHECK(equal_ideals(E2, qideal("x-z", {"x", "z"})));

  auto E3 = eliminate(qideal("x", {"x", "y"}), std::vector<std::string>{"x"});
  CHECK(E3.is_zero_ideal());
}

TEST_CASE("eliminated generators vanish on the solution set") {
  GFp k(5);
  auto I = testing::pideal("x - y^2, y*z - 1", {"x", "y", "z"}, 5);
  auto E = eliminate(I, std::vector<std::string>{"y"});
  auto points = testing::affine_points(I);
  CHECK(!points.empty());
  for (const auto& pt : points) {
    std::vector<GFp::Elem> proj = {pt[0], pt[2]};  // remaining variables x, z
    for (const auto& g : E.gens) CHECK(k.is_zero(g.evaluate(proj)));
  }
}

TEST_CASE("intersect examples") {
  auto vars = std::vector<std::string>{"x", "y"};
  CHECK(equal_ideals(intersect(qideal("x", vars), qideal("y", vars)), qideal("x*y", vars)));
  auto I = qideal("x^2, x*y - y", vars);
  CHECK(equal_ideals(intersect(I, qideal("1", vars)), I));
  CHECK(equal_ideals(intersect(qideal("x^2, y", vars), qideal("x", vars)),
                     qideal("x^2, x*y", vars)));
}

TEST_CASE("intersection membership cross-checked with brute force") {
  auto vars = std::vector<std::string>{"x", "y"};
  auto A = qideal("x^2, y", vars);
  auto B = qideal("x", vars);
  auto J = intersect(A, B);
  for (const auto& g : J.gens) {
    CHECK(testing::brute_force_member(g, A.gens, g.total_degree() + 3));
    CHECK(testing::brute_force_member(g, B.gens, g.total_degree() + 3));
  }
  CHECK(testing::brute_force_member(qpoly("x^2", vars), J.gens, 5));
  CHECK_FALSE(testing::brute_force_member(qpoly("x", vars), J.gens, 6));
}

TEST_CASE("quotient examples") {
  auto vars = std::vector<std::string>{"x", "y"};
  CHECK(equal_ideals(quotient(qideal("x*y", vars), qpoly("x", vars)), qideal("y", vars)));
  CHECK(equal_ideals(quotient(qideal("x^2, x*y", vars), qpoly("x", vars)),
                     qideal("x, y", vars)));
  auto I = qideal("x^3 - y, x*y", vars);
  CHECK(equal_ideals(quotient(I, qpoly("1", vars)), I));
  CHECK(equal_ideals(quotient(I, qideal("1", vars)), I));
  CHECK_THROWS_AS(quotient(I, Polynomial<QQ>::zero(I.ring)), Error);
}

TEST_CASE("quotient and intersection consistency") {
  auto vars = std::vector<std::string>{"x", "y", "z"};
  auto I = qideal("x*y - z^2, y^2", vars);
  auto J = qideal("x, z", vars);
  auto cap = intersect(I, J);
  auto Igb = groebner(I);
  for (const auto& g : cap.gens) CHECK(reduces_to_zero(g, Igb));  // I cap J inside I
  auto g = qpoly("x - z", vars);
  auto colon = quotient(I, g);
  for (const auto& q : colon.gens) CHECK(reduces_to_zero(q * g, Igb));  // (I:g)*g inside I
}

TEST_CASE("saturation examples") {
  // the worked slicing example: ((z0 t1 - z1 t0) + (t0)) : (t0,t1)^inf = (z0, t0)
  auto vars = std::vector<std::string>{"t0", "t1", "z0", "z1"};
  auto K = qideal("z0*t1 - z1*t0, t0", vars);
  auto S = saturate(K, qideal("t0, t1", vars));
  CHECK(equal_ideals(S, qideal("z0, t0", vars)));

  auto xv = std::vector<std::string>{"x", "y"};
  CHECK(equal_ideals(saturate(qideal("x^2", xv), qideal("x", xv)), qideal("1", xv)));
  CHECK(equal_ideals(saturate(qideal("x*y", xv), qideal("x", xv)), qideal("y", xv)));
}

TEST_CASE("saturation grows the ideal and is idempotent") {
  auto vars = std::vector<std::string>{"x", "y", "z"};
  auto I = qideal("x^2*y - x*z^2, y^3*z", vars);
  auto J = qideal("x, z", vars);
  auto S = saturate(I, J);
  auto Sgb = groebner(S);
  for (const auto& g : I.gens) CHECK(reduces_to_zero(g, Sgb));
  CHECK(equal_ideals(saturate(S, J), S));
}

TEST_CASE("graph ideal constructions") {
  // identity map of P^1
  auto g1 = graph_ideal(qideal("z0, z1", {"z0", "z1"}).gens);
  CHECK(equal_ideals(g1, qideal("z0*t1 - z1*t0", {"t0", "t1", "z0", "z1"})));

  // identity map of P^2: the 2x2 minors of the diagonal
  auto g2 = graph_ideal(qideal("z0, z1, z2", {"z0", "z1", "z2"}).gens);
  CHECK(equal_ideals(
      g2, qideal("z0*t1 - z1*t0, z0*t2 - z2*t0, z1*t2 - z2*t1",
                 {"t0", "t1", "t2", "z0", "z1", "z2"})));

  // the three-lines map: output only involves t and z, bihomogeneously
  auto I = qideal("x*y, x*z, y*z", {"x", "y", "z", "w"});
  auto g3 = graph_ideal(I.gens);
  CHECK(g3.ring->arity() == 7);
  for (const auto& g : g3.gens) {
    CHECK(g.is_homogeneous());
    long tdeg = -1, zdeg = -1;
    for (const auto& t : g.terms()) {
      long td = 0, zd = 0;
      for (std::size_t v = 0; v < 3; ++v) td += t.mono[v];
      for (std::size_t v = 3; v < 7; ++v) zd += t.mono[v];
      if (tdeg < 0) tdeg = td, zdeg = zd;
      CHECK(td == tdeg);  // bihomogeneous in (t | z)
      CHECK(zd == zdeg);
    }
  }

  CHECK_THROWS_AS(graph_ideal(qideal("x, x*y", {"x", "y"}).gens), Error);  // degree mismatch
  CHECK_THROWS_AS(graph_ideal(std::vector<Polynomial<QQ>>{
                      Polynomial<QQ>::zero(make_ring({"x"}))}),
                  Error);
}

TEST_CASE("slice and project the diagonal of P^1") {
  auto J = graph_ideal(qideal("z0, z1", {"z0", "z1"}).gens);
  SliceRng rng(1729, FieldSpec::rationals());
  auto [J1, ell] = slice_once(J, 2, rng);
  CHECK(!ell.is_zero());
  auto P = project_to_base(J1, 2);
  auto m = dim_and_degree(P);
  CHECK(m.projective_dimension == 0);
  CHECK(m.degree == 1);  // a single point: g_1 = 1 for the identity map
}

TEST_CASE("slicing the worked example with t0 reproduces (z0, t0)") {
  auto vars = std::vector<std::string>{"t0", "t1", "z0", "z1"};
  auto J0 = qideal("z0*t1 - z1*t0", vars);
  std::vector<Polynomial<QQ>> gens = J0.gens;
  gens.push_back(qpoly("t0", vars));
  auto sat = saturate(Ideal<QQ>(J0.ring, gens), qideal("t0, t1", vars));
  CHECK(equal_ideals(sat, qideal("z0, t0", vars)));
}

TEST_CASE("slice dimension bookkeeping and seed invariance") {
  auto I = qideal("x*y, x*z, y*z", {"x", "y", "z", "w"});
  auto J = graph_ideal(I.gens);
  long dim0 = affine_dimension(J);
  CHECK(dim0 == 5);  // cone over a 3-fold graph

  mpz_class deg_a, deg_b;
  for (std::uint64_t seed : {1729ull, 987654321ull}) {
    SliceRng rng(seed, FieldSpec::rationals());
    auto [J1, ell] = slice_once(J, 3, rng, dim0);
    CHECK(affine_dimension(Ideal<QQ>(J1.ring, J1.gens)) <= dim0 - 1);
    auto m = dim_and_degree(project_to_base(J1, 3));
    (seed == 1729ull ? deg_a : deg_b) = m.degree;
  }
  CHECK(deg_a == deg_b);  // the projected degree is seed-independent
}

TEST_CASE("genericity failure surfaces after the retry budget") {
  // with a single t-variable every linear slice is a multiple of t0, and
  // V(t0) never drops in dimension
  auto J = qideal("t0", {"t0", "z0", "z1"});
  SliceRng rng(1, FieldSpec::rationals());
  CHECK_THROWS_WITH_AS(slice_once(J, 1, rng),
                       doctest::Contains("no generic hyperplane"), Error);
  try {
    SliceRng rng2(2, FieldSpec::rationals());
    slice_once(J, 1, rng2);
  } catch (const Error& e) {
    CHECK(e.code() == errc::genericity_failure);
  }
}

TEST_CASE("project_to_base examples") {
  auto P = project_to_base(qideal("z0, t0", {"t0", "t1", "z0", "z1"}), 2);
  CHECK(equal_ideals(P, qideal("z0", {"z0", "z1"})));

  auto diag = graph_ideal(qideal("z0, z1", {"z0", "z1"}).gens);
  CHECK(project_to_base(diag, 2).is_zero_ideal());  // image is all of P^1
}

TEST_CASE("normalize_same_degree") {
  auto I = qideal("z, x*y*(x+y)", {"x", "y", "z", "w"});
  auto N = normalize_same_degree(I);
  CHECK(N.gens.size() == 5);
  for (const auto& g : N.gens) CHECK(g.total_degree() == 3);
  // same scheme: saturations with respect to the irrelevant ideal agree
  auto m = qideal("x, y, z, w", {"x", "y", "z", "w"});
  CHECK(equal_ideals(saturate(N, m), saturate(I, m)));

  auto already = qideal("x*y, z^2", {"x", "y", "z", "w"});
  CHECK(normalize_same_degree(already).gens == already.gens);

  auto forced = normalize_same_degree(qideal("x", {"x", "y"}), 2);
  CHECK(equal_ideals(forced, qideal("x^2, x*y", {"x", "y"})));
  for (const auto& g : forced.gens) CHECK(g.total_degree() == 2);

  CHECK_THROWS_AS(normalize_same_degree(qideal("x + 1", {"x", "y"})), Error);
}

TEST_CASE("jacobian ideal") {
  auto J = jacobian_ideal(qpoly("x^5+y^5+z^5+w^5+t^5", {"x", "y", "z", "w", "t"}));
  CHECK(J.gens.size() == 5);
  CHECK(J.gens[0] == qpoly("5*x^4", {"x", "y", "z", "w", "t"}));

  auto J2 = jacobian_ideal(qpoly("x*y", {"x", "y"}));
  CHECK(equal_ideals(J2, qideal("x, y", {"x", "y"})));

  // char-p degeneracy: all partials of x^2 vanish over GF(2)
  auto J3 = jacobian_ideal(testing::ppoly("x^2", {"x", "y"}, 2));
  CHECK(J3.is_zero_ideal());
}

TEST_CASE("dimension and degree of schemes") {
  CHECK(dim_and_degree(qideal("x^2+y^2+z^2", {"x", "y", "z"})).projective_dimension == 1);
  CHECK(dim_and_degree(qideal("x^2+y^2+z^2", {"x", "y", "z"})).degree == 2);

  auto tc = dim_and_degree(qideal("x*z-y^2, y*w-z^2, x*w-y*z", {"x", "y", "z", "w"}));
  CHECK(tc.projective_dimension == 1);
  CHECK(tc.degree == 3);

  auto irr = dim_and_degree(qideal("x, y, z", {"x", "y", "z"}));
  CHECK(irr.projective_dimension == -1);
  CHECK(irr.degree == 0);

  auto pn = dim_and_degree(Ideal<QQ>::zero(make_ring({"x", "y", "z", "w"})));
  CHECK(pn.projective_dimension == 3);
  CHECK(pn.degree == 1);

  CHECK_THROWS_AS(dim_and_degree(qideal("x^2 - y", {"x", "y"})), Error);
}

TEST_CASE("hypersurface degree is the generator degree") {
  std::uint64_t state = 31;
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t arity = 3 + splitmix64(state) % 2;
    long d = 1 + long(splitmix64(state) % 4);
    // a dense-ish random homogeneous form of degree d
    std::vector<Monomial> mons;
    testing::enumerate_monomials(arity, d, mons);
    std::vector<Polynomial<QQ>::Term> terms;
    for (const auto& m : mons) {
      if (m.total_degree() != d) continue;
      long c = long(splitmix64(state) % 7) - 3;
      if (c) terms.push_back({m, mpq_class(c)});
    }
    std::vector<std::string> names;
    for (std::size_t v = 0; v < arity; ++v) names.push_back("x" + std::to_string(v));
    auto R = make_ring(names);
    auto f = Polynomial<QQ>::from_terms(R, std::move(terms));
    if (f.is_zero()) continue;
    auto m = dim_and_degree(Ideal<QQ>(R, {f}));
    CHECK(m.projective_dimension == long(arity) - 2);
    CHECK(m.degree == d);
  }
}

TEST_CASE("dimension never grows when generators are added") {
  auto vars = std::vector<std::string>{"x", "y", "z", "w"};
  auto I = qideal("x*z-y^2", vars);
  long prev = dim_and_degree(I).projective_dimension;
  for (const char* extra : {"y*w-z^2", "x*w-y*z", "x^3 - w^3"}) {
    auto gens = I.gens;
    gens.push_back(qpoly(extra, vars));
    I = Ideal<QQ>(I.ring, gens);
    long cur = dim_and_degree(I).projective_dimension;
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("trim_generators drops redundant generators") {
  auto I = qideal("x, y, x + y", {"x", "y", "z"});
  auto T = trim_generators(I);
  CHECK(T.gens.size() == 2);
  CHECK(equal_ideals(T, I));
}
