#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccs/request.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

py::object run(const std::string& command, const std::string& generators,
               std::optional<std::vector<std::string>> vars, const std::string& field,
               std::optional<std::uint64_t> seed, bool force, bool simplify,
               std::optional<long> d, std::optional<long> n) {
  ccs::Request req;
  auto cmd = ccs::command_from_name(command);
  if (!cmd) ccs::fail(ccs::errc::invalid_input, "unknown command '" + command + "'");
  req.command = *cmd;
  req.generators = generators;
  req.vars = std::move(vars);
  req.field = ccs::parse_field_spec(field);
  if (seed) req.seed = *seed;
  req.force = force;
  req.simplify = simplify;
  req.excess_d = d;
  req.excess_n = n;

  ccs::Answer ans = ccs::run_request(req);
  py::dict out;
  out["result"] = json_to_py(ccs::render_json(ans));
  out["text"] = ccs::render_text(ans);
  py::list warnings;
  for (const auto& w : ans.warnings) warnings.append(py::str(w));
  out["warnings"] = warnings;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Characteristic classes of projective schemes: Segre, Fulton, "
      "Chern-Schwartz-MacPherson and Milnor classes, Euler characteristics and "
      "projective degrees, from ideal generators.";

  py::register_exception<ccs::Error>(m, "CcsError");

  m.def("run", &run, py::arg("command"), py::arg("generators"),
        py::arg("vars") = py::none(), py::arg("field") = "q",
        py::arg("seed") = py::none(), py::arg("force") = false,
        py::arg("simplify") = false, py::arg("d") = py::none(),
        py::arg("n") = py::none(),
        "Run one request; commands: segre, fulton, csm, milnor, euler, "
        "euleraffine, degrees, excess.");

  m.attr("DEFAULT_SEED") = py::int_(ccs::kDefaultSeed);
}
