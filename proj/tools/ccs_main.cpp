#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ccs/request.hpp"

namespace {

int exit_code_for(const ccs::Error& e) {
  switch (e.code()) {
    case ccs::errc::parse_error: return 2;
    case ccs::errc::genericity_failure: return 3;
    case ccs::errc::unsupported: return 4;
    default: return 1;
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CCS_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "ccs: ignoring malformed CCS_SEED\n";
    }
  }
  return ccs::kDefaultSeed;
}

struct CommonOpts {
  std::string field = "q";
  std::string vars;
  std::uint64_t seed = default_seed();
  std::string format = "text";
  bool force = false;
  bool simplify = false;
  std::string generators;
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_generators = true) {
  sub->add_option("--field", o.field, "coefficient field: q or fp:<p>")
      ->default_val(o.field);
  sub->add_option("--vars", o.vars, "comma-separated ring variables (inferred if absent)");
  sub->add_option("--seed", o.seed, "seed for the random hyperplane slices")
      ->default_val(o.seed);
  sub->add_option("--format", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val(o.format);
  sub->add_flag("--force", o.force, "allow csm/euler/milnor over GF(p)");
  sub->add_flag("--simplify", o.simplify, "trim redundant generators first");
  if (with_generators)
    sub->add_option("generators", o.generators, "ideal generators, comma separated")
        ->required();
}

ccs::Request to_request(ccs::Command cmd, const CommonOpts& o) {
  ccs::Request req;
  req.command = cmd;
  req.field = ccs::parse_field_spec(o.field);
  req.seed = o.seed;
  req.force = o.force;
  req.simplify = o.simplify;
  req.generators = o.generators;
  if (!o.vars.empty()) {
    std::vector<std::string> names;
    std::size_t p = 0;
    while (p <= o.vars.size()) {
      std::size_t c = o.vars.find(',', p);
      if (c == std::string::npos) c = o.vars.size();
      std::string n = o.vars.substr(p, c - p);
      while (!n.empty() && n.front() == ' ') n.erase(n.begin());
      while (!n.empty() && n.back() == ' ') n.pop_back();
      if (!n.empty()) names.push_back(n);
      p = c + 1;
    }
    req.vars = names;
  }
  return req;
}

int emit(const ccs::Answer& ans, const std::string& format) {
  for (const auto& w : ans.warnings) std::cerr << "ccs: warning: " << w << "\n";
  if (format == "json")
    std::cout << ccs::render_json(ans).dump() << "\n";
  else
    std::cout << ccs::render_text(ans) << "\n";
  return 0;
}

int run_batch(const std::string& path, const CommonOpts& defaults_opts) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "ccs: cannot open batch file '" << path << "'\n";
    return 1;
  }
  ccs::Request defaults = to_request(ccs::Command::segre, defaults_opts);
  std::string line;
  long lineno = 0;
  bool any_failed = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line;
    while (!stripped.empty() && std::isspace(static_cast<unsigned char>(stripped.front())))
      stripped.erase(stripped.begin());
    if (stripped.empty() || stripped[0] == '#') continue;
    nlohmann::json out;
    out["line"] = lineno;
    try {
      ccs::Request req = ccs::parse_batch_line(line, defaults);
      ccs::Answer ans = ccs::run_request(req);
      out["ok"] = true;
      out["command"] = ccs::command_name(req.command);
      out["result"] = ccs::render_json(ans);
    } catch (const ccs::Error& e) {
      out["ok"] = false;
      out["error"] = e.what();
      out["exit_code"] = exit_code_for(e);
      any_failed = true;
    }
    std::cout << out.dump() << "\n";
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ccs: characteristic classes of projective schemes\n"
      "Computes Segre, Fulton, Chern-Schwartz-MacPherson and Milnor classes and\n"
      "Euler characteristics from ideal generators."};
  app.require_subcommand(1);

  struct SubSpec {
    ccs::Command cmd;
    const char* name;
    const char* desc;
  };
  const std::vector<SubSpec> specs = {
      {ccs::Command::segre, "segre", "Segre class of the scheme the ideal defines"},
      {ccs::Command::fulton, "fulton", "Chern-Fulton class"},
      {ccs::Command::csm, "csm", "Chern-Schwartz-MacPherson class of the support"},
      {ccs::Command::milnor, "milnor", "Fulton and CSM classes and their difference"},
      {ccs::Command::euler, "euler", "topological Euler characteristic of the support"},
      {ccs::Command::euleraffine, "euleraffine",
       "Euler characteristic of an affine scheme"},
      {ccs::Command::degrees, "degrees", "projective degrees of the associated map"},
      {ccs::Command::excess, "excess",
       "excess-intersection count d^n - integral((1+dH)^n * s)"},
  };

  std::vector<std::unique_ptr<CommonOpts>> opts;
  std::vector<std::pair<ccs::Command, CLI::App*>> subs;
  long excess_d = 0, excess_n = 0;
  for (const auto& s : specs) {
    auto o = std::make_unique<CommonOpts>();
    CLI::App* sub = app.add_subcommand(s.name, s.desc);
    add_common(sub, *o);
    if (s.cmd == ccs::Command::excess) {
      sub->add_option("--d", excess_d, "degree of the hypersurfaces")->required();
      sub->add_option("--n", excess_n, "ambient projective dimension")->required();
    }
    subs.emplace_back(s.cmd, sub);
    opts.push_back(std::move(o));
  }

  auto batch_opts = std::make_unique<CommonOpts>();
  std::string batch_file;
  CLI::App* batch = app.add_subcommand(
      "batch", "run requests from a file, one '<command>; <vars>; <field>; <generators>' per line");
  batch->add_option("file", batch_file, "request file")->required();
  add_common(batch, *batch_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (batch->parsed()) return run_batch(batch_file, *batch_opts);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i].second->parsed()) continue;
      ccs::Request req = to_request(subs[i].first, *opts[i]);
      if (req.command == ccs::Command::excess) {
        req.excess_d = excess_d;
        req.excess_n = excess_n;
      }
      return emit(ccs::run_request(req), opts[i]->format);
    }
  } catch (const ccs::Error& e) {
    std::cerr << "ccs: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "ccs: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
