#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "ccs/classes.hpp"
#include "ccs/parse.hpp"
#include "ccs/render.hpp"

namespace ccs {

enum class Command { segre, fulton, csm, milnor, euler, euleraffine, degrees, excess };

std::optional<Command> command_from_name(const std::string& name);
std::string command_name(Command c);

struct Request {
  Command command = Command::segre;
  FieldSpec field = FieldSpec::rationals();
  std::optional<std::vector<std::string>> vars;  // inferred from the source if absent
  std::uint64_t seed = kDefaultSeed;
  bool force = false;     // allow csm/euler/milnor over GF(p)
  bool simplify = false;  // trim redundant generators before inclusion-exclusion
  std::string generators;
  std::optional<long> excess_d;
  std::optional<long> excess_n;
};

struct Answer {
  enum class Kind { chow, integer, report, degrees } kind = Kind::chow;
  std::string label;  // "Segre class", ...
  std::optional<ChowClass> chow;
  ClassReport report;
  mpz_class integer = 0;
  std::vector<mpz_class> degrees;
  std::vector<std::string> warnings;
};

// Parse the generators, run the requested pipeline over the requested field.
// csm/euler/milnor/euleraffine over GF(p) require `force` (the theory backing
// them is characteristic-0; the classes are computed but uninterpreted).
Answer run_request(const Request& req);

std::string render_text(const Answer& ans);
nlohmann::json render_json(const Answer& ans);

// One request per line: "<command>; <vars>; <field>; <generators>"
// (empty vars = infer; field "q" or "fp:<p>").  Used by batch mode.
Request parse_batch_line(const std::string& line, const Request& defaults);

// parse "q" or "fp:<p>"
FieldSpec parse_field_spec(const std::string& text);

}  // namespace ccs
