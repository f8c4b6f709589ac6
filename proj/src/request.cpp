#include "ccs/request.hpp"

#include <algorithm>

namespace ccs {

std::optional<Command> command_from_name(const std::string& name) {
  if (name == "segre") return Command::segre;
  if (name == "fulton" || name == "cf") return Command::fulton;
  if (name == "csm") return Command::csm;
  if (name == "milnor") return Command::milnor;
  if (name == "euler") return Command::euler;
  if (name == "euleraffine") return Command::euleraffine;
  if (name == "degrees") return Command::degrees;
  if (name == "excess") return Command::excess;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::segre: return "segre";
    case Command::fulton: return "fulton";
    case Command::csm: return "csm";
    case Command::milnor: return "milnor";
    case Command::euler: return "euler";
    case Command::euleraffine: return "euleraffine";
    case Command::degrees: return "degrees";
    case Command::excess: return "excess";
  }
  return "?";
}

FieldSpec parse_field_spec(const std::string& text) {
  if (text == "q" || text == "Q" || text.empty()) return FieldSpec::rationals();
  if (text.rfind("fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(text.substr(3));
    } catch (...) {
      fail(errc::invalid_input, "bad field spec '" + text + "'");
    }
    return FieldSpec::prime_field(std::uint32_t(p));
  }
  fail(errc::invalid_input, "bad field spec '" + text + "' (expected q or fp:<p>)");
}

namespace {

bool needs_char_zero(Command c) {
  return c == Command::csm || c == Command::euler || c == Command::milnor ||
         c == Command::euleraffine;
}

// excess: the generators string holds the Segre class as a polynomial in H
ChowClass parse_chow_argument(const std::string& src, long n) {
  ParsedIdeal p = parse_ideal_source(src, std::vector<std::string>{"H"});
  ChowClass c(n);
  if (p.gens.size() != 1)
    fail(errc::invalid_input, "excess: expected a single class expression");
  for (const auto& t : p.gens[0].terms()) {
    long k = t.mono.total_degree();
    if (k > n)
      fail(errc::invalid_input, "excess: H-power exceeds the ambient dimension");
    c[std::size_t(k)] = t.coeff;
  }
  return c;
}

template <class F>
Answer run_typed(const Request& req, const F& field) {
  PipelineOptions opt;
  opt.seed = req.seed;
  opt.simplify = req.simplify;

  Answer ans;
  if (!field.spec().is_rationals() && needs_char_zero(req.command))
    ans.warnings.push_back(
        "CSM/Euler classes over GF(p) are computed formally; no interpretation is "
        "known in positive characteristic");

  Ideal<F> I = parse_ideal(req.generators, req.vars, field);
  switch (req.command) {
    case Command::segre:
      ans.kind = Answer::Kind::chow;
      ans.label = "Segre class";
      ans.chow = segre(I, opt);
      break;
    case Command::fulton:
      ans.kind = Answer::Kind::chow;
      ans.label = "Fulton class";
      ans.chow = fulton(I, opt);
      break;
    case Command::csm:
      ans.kind = Answer::Kind::chow;
      ans.label = "Chern-Schwartz-MacPherson class";
      ans.chow = csm(I, opt);
      break;
    case Command::milnor:
      ans.kind = Answer::Kind::report;
      ans.label = "Milnor class";
      ans.report = milnor(I, opt);
      break;
    case Command::euler:
      ans.kind = Answer::Kind::integer;
      ans.label = "Euler characteristic";
      ans.integer = euler(I, opt);
      break;
    case Command::euleraffine:
      ans.kind = Answer::Kind::integer;
      ans.label = "Euler characteristic";
      ans.integer = euler_affine(I, opt);
      break;
    case Command::degrees:
      ans.kind = Answer::Kind::degrees;
      ans.label = "projective degrees";
      ans.degrees = projective_degrees(I, opt).g;
      break;
    case Command::excess:
      fail(errc::internal_error, "excess handled before field dispatch");
  }
  return ans;
}

}  // namespace

Answer run_request(const Request& req) {
  if (req.command == Command::excess) {
    if (!req.excess_d || !req.excess_n)
      fail(errc::invalid_input, "excess requires both d and n");
    if (*req.excess_n < 0) fail(errc::invalid_input, "excess: n must be >= 0");
    Answer ans;
    ans.kind = Answer::Kind::integer;
    ans.label = "excess intersection count";
    ans.integer = excess_count(parse_chow_argument(req.generators, *req.excess_n),
                               *req.excess_d);
    return ans;
  }

  if (!req.field.is_rationals() && needs_char_zero(req.command) && !req.force)
    fail(errc::unsupported,
         command_name(req.command) +
             " over GF(p) requires --force (the class theory is characteristic-0)");

  if (req.field.is_rationals()) return run_typed(req, QQ{});
  return run_typed(req, GFp(req.field.p));
}

std::string render_text(const Answer& ans) {
  switch (ans.kind) {
    case Answer::Kind::chow: return render_chow_text(*ans.chow);
    case Answer::Kind::integer: return ans.integer.get_str();
    case Answer::Kind::report: return render_report_text(ans.report);
    case Answer::Kind::degrees: return render_degrees_text(ans.degrees);
  }
  return "";
}

nlohmann::json render_json(const Answer& ans) {
  switch (ans.kind) {
    case Answer::Kind::chow: return render_chow_json(*ans.chow);
    case Answer::Kind::integer:
      if (ans.label == "excess intersection count") return {{"excess", mpz_to_json(ans.integer)}};
      return {{"euler", mpz_to_json(ans.integer)}};
    case Answer::Kind::report: return render_report_json(ans.report);
    case Answer::Kind::degrees: return render_degrees_json(ans.degrees);
  }
  return {};
}

Request parse_batch_line(const std::string& line, const Request& defaults) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t sep = line.find(';', start);
    if (sep == std::string::npos)
      fail(errc::invalid_input,
           "batch line must be '<command>; <vars>; <field>; <generators>'");
    parts.push_back(line.substr(start, sep - start));
    start = sep + 1;
  }
  parts.push_back(line.substr(start));

  auto strip = [](std::string s) {
    auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
  };

  Request req = defaults;
  auto cmd = command_from_name(strip(parts[0]));
  if (!cmd) fail(errc::invalid_input, "unknown command '" + strip(parts[0]) + "'");
  req.command = *cmd;

  std::string vars = strip(parts[1]);
  if (vars.empty()) {
    req.vars = std::nullopt;
  } else {
    std::vector<std::string> names;
    std::size_t p = 0;
    while (p <= vars.size()) {
      std::size_t c = vars.find(',', p);
      if (c == std::string::npos) c = vars.size();
      std::string n = strip(vars.substr(p, c - p));
      if (!n.empty()) names.push_back(n);
      p = c + 1;
    }
    req.vars = names;
  }

  req.field = parse_field_spec(strip(parts[2]));
  req.generators = strip(parts[3]);
  return req;
}

}  // namespace ccs
