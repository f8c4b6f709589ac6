#include "ccs/parse.hpp"

#include <cctype>

namespace ccs {

namespace {

enum class Tok { ident, integer, plus, minus, star, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::ident, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::plus, "+", i}); break;
      case '-': out.push_back({Tok::minus, "-", i}); break;
      case '*': out.push_back({Tok::star, "*", i}); break;
      case '^': out.push_back({Tok::caret, "^", i}); break;
      case '(': out.push_back({Tok::lparen, "(", i}); break;
      case ')': out.push_back({Tok::rparen, ")", i}); break;
      case ',': out.push_back({Tok::comma, ",", i}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, RingPtr<QQ> ring, bool explicit_vars)
      : toks_(std::move(toks)), ring_(std::move(ring)), explicit_vars_(explicit_vars) {}

  std::vector<Polynomial<QQ>> parse_generators() {
    std::vector<Polynomial<QQ>> gens;
    if (peek().kind == Tok::end)
      throw ParseError("empty generator list", peek().pos);
    while (true) {
      gens.push_back(parse_poly());
      if (peek().kind == Tok::comma) {
        ++cur_;
        continue;
      }
      expect(Tok::end, "end of input");
      break;
    }
    return gens;
  }

 private:
  const Token& peek() const { return toks_[cur_]; }

  void expect(Tok k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what, peek().pos);
    ++cur_;
  }

  static bool starts_atom(Tok k) {
    return k == Tok::ident || k == Tok::integer || k == Tok::lparen;
  }

  Polynomial<QQ> parse_poly() {
    bool neg = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      neg = peek().kind == Tok::minus;
      ++cur_;
    }
    Polynomial<QQ> acc = parse_term();
    if (neg) acc = -acc;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool sub = peek().kind == Tok::minus;
      ++cur_;
      Polynomial<QQ> t = parse_term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial<QQ> parse_term() {
    Polynomial<QQ> acc = parse_factor();
    while (true) {
      if (peek().kind == Tok::star) {
        ++cur_;
        if (!starts_atom(peek().kind))
          throw ParseError("expected a factor after '*'", peek().pos);
        acc = acc * parse_factor();
      } else if (starts_atom(peek().kind)) {
        acc = acc * parse_factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Polynomial<QQ> parse_factor() {
    Polynomial<QQ> base = parse_atom();
    if (peek().kind == Tok::caret) {
      ++cur_;
      if (peek().kind != Tok::integer)
        throw ParseError("expected a non-negative integer exponent", peek().pos);
      unsigned long e = 0;
      try {
        e = std::stoul(peek().text);
      } catch (...) {
        throw ParseError("exponent out of range", peek().pos);
      }
      if (e > 4096) throw ParseError("exponent out of range", peek().pos);
      ++cur_;
      return base.pow(unsigned(e));
    }
    return base;
  }

  Polynomial<QQ> parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident: {
        auto idx = ring_->index_of(t.text);
        if (!idx) {
          if (explicit_vars_)
            throw Error(errc::unknown_variable,
                        "unknown variable '" + t.text + "' (at position " +
                            std::to_string(t.pos) + ")");
          throw ParseError("unknown variable '" + t.text + "'", t.pos);
        }
        ++cur_;
        return Polynomial<QQ>::variable(ring_, *idx);
      }
      case Tok::integer: {
        ++cur_;
        return Polynomial<QQ>::constant(ring_, mpq_class(mpz_class(t.text)));
      }
      case Tok::lparen: {
        ++cur_;
        Polynomial<QQ> p = parse_poly();
        expect(Tok::rparen, "')'");
        return p;
      }
      default:
        throw ParseError("expected a variable, integer or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t cur_ = 0;
  RingPtr<QQ> ring_;
  bool explicit_vars_;
};

}  // namespace

ParsedIdeal parse_ideal_source(const std::string& src,
                               const std::optional<std::vector<std::string>>& vars) {
  std::vector<Token> toks = tokenize(src);

  std::vector<std::string> names;
  if (vars) {
    names = *vars;
  } else {
    for (const auto& t : toks)
      if (t.kind == Tok::ident &&
          std::find(names.begin(), names.end(), t.text) == names.end())
        names.push_back(t.text);
  }
  if (names.empty())
    names.push_back("x");  // constant-only source such as "0" still needs a ring

  auto ring = make_ring(names);
  Parser parser(std::move(toks), ring, vars.has_value());
  return {names, parser.parse_generators()};
}

namespace {

template <class F>
std::string gens_to_source(const std::vector<Polynomial<F>>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_same_v<F, QQ>)
      out += primitive_part(gens[i]).str();
    else
      out += gens[i].str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ideal_to_source(const std::vector<Polynomial<QQ>>& gens) {
  return gens_to_source(gens);
}
std::string ideal_to_source(const std::vector<Polynomial<GFp>>& gens) {
  return gens_to_source(gens);
}

}  // namespace ccs
