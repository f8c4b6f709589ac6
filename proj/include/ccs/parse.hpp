#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccs/ideal.hpp"

namespace ccs {

// Generators parsed over the integers; the field is applied afterwards so one
// parse serves both coefficient fields.
struct ParsedIdeal {
  std::vector<std::string> vars;
  std::vector<Polynomial<QQ>> gens;
};

// Grammar (generators split on top-level commas):
//   poly   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*          (juxtaposition multiplies)
//   factor := atom ('^' nat)?
//   atom   := variable | integer | '(' poly ')'
// Variables are inferred in first-appearance order when `vars` is absent;
// with explicit `vars`, unknown identifiers are an error.
ParsedIdeal parse_ideal_source(const std::string& src,
                               const std::optional<std::vector<std::string>>& vars);

template <class F>
Ideal<F> to_field_ideal(const ParsedIdeal& p, const F& field) {
  auto R = make_ring<F>(p.vars, field);
  std::vector<Polynomial<F>> gens;
  gens.reserve(p.gens.size());
  for (const auto& g : p.gens) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : g.terms())
      terms.push_back({t.mono, field.from_mpz(mpz_class(t.coeff.get_num()))});
    gens.push_back(Polynomial<F>::from_terms(R, std::move(terms)));
  }
  return Ideal<F>(R, std::move(gens));
}

template <class F>
Ideal<F> parse_ideal(const std::string& src,
                     const std::optional<std::vector<std::string>>& vars, const F& field) {
  return to_field_ideal(parse_ideal_source(src, vars), field);
}

// Generators rendered back to parser-ready source.  Rational coefficients are
// cleared to a primitive integer form, which generates the same ideal.
std::string ideal_to_source(const std::vector<Polynomial<QQ>>& gens);
std::string ideal_to_source(const std::vector<Polynomial<GFp>>& gens);

}  // namespace ccs
