#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccs/groebner.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace ccs;
using testing::qideal;
using testing::qpoly;

TEST_CASE("normal form examples") {
  auto lex = MonomialOrder::lex();
  CHECK(normal_form(qpoly("x^2*y", {"x", "y", "z"}), {qpoly("x^2-z", {"x", "y", "z"})},
                    lex) == qpoly("y*z", {"x", "y", "z"}));
  auto b = qpoly("x*y - z^3", {"x", "y", "z"});
  CHECK(normal_form(b, {b}, lex).is_zero());
  CHECK(normal_form(qpoly("x+y", {"x", "y"}), {qpoly("x-y", {"x", "y"})}, lex) ==
        qpoly("2*y", {"x", "y"}));
  // zero input, zero output
  CHECK(normal_form(Polynomial<QQ>::zero(b.ring()), {b}, lex).is_zero());
}

TEST_CASE("normal form is idempotent") {
  auto lex = MonomialOrder::lex();
  std::vector<Polynomial<QQ>> basis = {qpoly("x^2-z", {"x", "y", "z"}),
                                       qpoly("x*y-1", {"x", "y", "z"})};
  for (const char* src : {"x^3*y^2 - z", "x^5 + x*y + y^3", "x^2*y^2*z^2 - 7"}) {
    auto p = qpoly(src, {"x", "y", "z"});
    auto r = normal_form(p, basis, lex);
    CHECK(normal_form(r, basis, lex) == r);
  }
}

TEST_CASE("s-polynomial examples") {
  auto lex = MonomialOrder::lex();
  auto f = qpoly("x^2-y", {"x", "y"});
  auto g = qpoly("x*y-1", {"x", "y"});
  CHECK(s_polynomial(f, f, lex).is_zero());
  // lcm = x^2 y: y*f - x*g = x - y^2
  CHECK(s_polynomial(f, g, lex) == qpoly("x - y^2", {"x", "y"}));
  CHECK_THROWS_AS(s_polynomial(f, Polynomial<QQ>::zero(f.ring()), lex), Error);
}

TEST_CASE("coprime leading monomials reduce to zero") {
  auto ord = MonomialOrder::grevlex();
  auto f = qpoly("x^2 + y", {"x", "y"});
  auto g = qpoly("y^3 - x", {"x", "y"});
  auto s = s_polynomial(f, g, ord);
  CHECK(normal_form(s, {f, g}, ord).is_zero());
}

TEST_CASE("buchberger examples") {
  auto lex = MonomialOrder::lex();
  auto I1 = qideal("x, y", {"x", "y"});
  auto gb1 = buchberger(I1.gens, lex, I1.ring);
  REQUIRE(gb1.elements.size() == 2);
  CHECK(gb1.elements[0] == qpoly("y", {"x", "y"}));
  CHECK(gb1.elements[1] == qpoly("x", {"x", "y"}));

  auto I2 = qideal("x-y, y-z", {"x", "y", "z"});
  auto gb2 = buchberger(I2.gens, lex, I2.ring);
  REQUIRE(gb2.elements.size() == 2);
  CHECK(gb2.elements[0] == qpoly("y-z", {"x", "y", "z"}));
  CHECK(gb2.elements[1] == qpoly("x-z", {"x", "y", "z"}));
}

TEST_CASE("twisted cubic is already a Groebner basis") {
  // under grevlex the three quadrics stay put (every S-pair reduces to zero;
  // checked by hand: S(f1,f3) = -x*f2, the others reduce along the basis)
  auto I = qideal("x*z-y^2, y*w-z^2, x*w-y*z", {"x", "y", "z", "w"});
  auto gb = buchberger(I.gens, MonomialOrder::grevlex(), I.ring);
  REQUIRE(gb.elements.size() == 3);
  for (const auto& e : gb.elements) {
    bool matches_input = false;
    for (const auto& g : I.gens)
      if (e == primitive_or_monic(g, gb.order) || e == primitive_or_monic(-g, gb.order))
        matches_input = true;
    CHECK(matches_input);
  }
  // grevlex initial ideal: y^2, yz, z^2
  auto lt = leading_term_ideal(gb);
  REQUIRE(lt.size() == 3);
  CHECK(lt[0] == Monomial{0, 2, 0, 0});
  CHECK(lt[1] == Monomial{0, 1, 1, 0});
  CHECK(lt[2] == Monomial{0, 0, 2, 0});

  // under lex the same three elements form the basis with initial ideal
  // (xz, yw, xw)
  auto gbl = buchberger(I.gens, MonomialOrder::lex(), I.ring);
  auto ltl = leading_term_ideal(gbl);
  REQUIRE(ltl.size() == 3);
  std::vector<Monomial> expected = {Monomial{0, 1, 0, 1}, Monomial{1, 0, 0, 1},
                                    Monomial{1, 0, 1, 0}};
  std::sort(expected.begin(), expected.end());
  CHECK(ltl == expected);
}

TEST_CASE("leading term ideal examples") {
  auto lex = MonomialOrder::lex();
  auto gb = buchberger(qideal("x-z, y-z", {"x", "y", "z"}).gens, lex,
                       qideal("x", {"x", "y", "z"}).ring);
  auto lt = leading_term_ideal(gb);
  REQUIRE(lt.size() == 2);
  CHECK(lt[0] == Monomial{0, 1, 0});
  CHECK(lt[1] == Monomial{1, 0, 0});

  GroebnerBasis<QQ> empty{make_ring({"x"}), lex, {}};
  CHECK(leading_term_ideal(empty).empty());
}

TEST_CASE("reduced basis is unique under input permutation") {
  std::vector<std::string> vars{"x", "y", "z", "w"};
  auto I = qideal("x*z-y^2, y*w-z^2, x*w-y*z, x^2*w - y^3", vars);
  auto ord = MonomialOrder::grevlex();
  auto ref = buchberger(I.gens, ord, I.ring);
  std::uint64_t state = 17;
  for (int trial = 0; trial < 5; ++trial) {
    auto perm = I.gens;
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[splitmix64(state) % i]);
    auto gb = buchberger(perm, ord, I.ring);
    CHECK(gb.elements == ref.elements);
  }
}

TEST_CASE("groebner certificate on a worked basis") {
  auto I = qideal("x^2+y, x*y - 1, y^3 - x", {"x", "y"});
  auto gb = buchberger(I.gens, MonomialOrder::grevlex(), I.ring);
  CHECK(verify_groebner(gb, I.gens));
  // a mangled basis must fail the certificate
  auto broken = gb;
  broken.elements.pop_back();
  CHECK_FALSE(verify_groebner(broken, I.gens));
}

TEST_CASE("certificate hook runs inside buchberger") {
  set_groebner_certificate(true);
  auto I = qideal("x*z-y^2, y*w-z^2, x*w-y*z", {"x", "y", "z", "w"});
  auto gb = buchberger(I.gens, MonomialOrder::grevlex(), I.ring);
  set_groebner_certificate(false);
  CHECK(gb.elements.size() == 3);
}

TEST_CASE("membership agrees with the brute-force linear-algebra oracle") {
  std::vector<std::string> vars{"x", "y"};
  auto I = qideal("x^2 - y, x*y - 1", vars);
  auto ord = MonomialOrder::grevlex();
  auto gb = buchberger(I.gens, ord, I.ring);
  for (const char* src :
       {"x^3 - x", "x^3 - 1", "y^2 - x", "x^4*y - x^2", "x + y", "x^2*y^2 - 1", "y - 7"}) {
    auto p = qpoly(src, vars);
    bool via_gb = normal_form(p, gb.elements, ord).is_zero();
    bool via_oracle = testing::brute_force_member(p, I.gens, p.total_degree() + 4);
    CHECK(via_gb == via_oracle);
  }
}

TEST_CASE("prime field groebner bases") {
  GFp k(7);
  auto R = make_ring<GFp>({"x", "y"}, k);
  auto x = Polynomial<GFp>::variable(R, "x");
  auto y = Polynomial<GFp>::variable(R, "y");
  auto gb = buchberger<GFp>({x * x - y, x * y - Polynomial<GFp>::constant(R, 1)},
                            MonomialOrder::lex(), R);
  CHECK(verify_groebner(gb, {x * x - y}));
  for (const auto& e : gb.elements)
    CHECK(e.leading_term(gb.order).coeff == 1);  // monic
}
