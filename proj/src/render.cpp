#include "ccs/render.hpp"

namespace ccs {

std::string render_chow_text(const ChowClass& c) { return c.str(); }

nlohmann::json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());  // beyond 64 bits: decimal string
}

nlohmann::json render_chow_json(const ChowClass& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& a : c.integer_coeffs()) coeffs.push_back(mpz_to_json(a));
  return {{"n", c.dim()}, {"coefficients", coeffs}};
}

std::string render_report_text(const ClassReport& rep) {
  std::string out;
  if (rep.segre) out += "Segre class : " + rep.segre->str() + "\n";
  if (rep.fulton) out += "Fulton class : " + rep.fulton->str() + "\n";
  if (rep.csm) out += "Chern-Schwartz-MacPherson class : " + rep.csm->str() + "\n";
  if (rep.milnor) out += "Milnor class : " + rep.milnor->str() + "\n";
  if (rep.euler) out += "Euler characteristic : " + rep.euler->get_str() + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

nlohmann::json render_report_json(const ClassReport& rep) {
  nlohmann::json j = nlohmann::json::object();
  auto put = [&](const char* key, const std::optional<ChowClass>& c) {
    if (!c) return;
    j["n"] = c->dim();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : c->integer_coeffs()) coeffs.push_back(mpz_to_json(a));
    j[key] = coeffs;
  };
  put("segre", rep.segre);
  put("fulton", rep.fulton);
  put("csm", rep.csm);
  put("milnor", rep.milnor);
  if (rep.euler) j["euler"] = mpz_to_json(*rep.euler);
  return j;
}

std::string render_degrees_text(const std::vector<mpz_class>& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += g[i].get_str();
  }
  return out + ")";
}

nlohmann::json render_degrees_json(const std::vector<mpz_class>& g) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : g) a.push_back(mpz_to_json(v));
  return {{"degrees", a}};
}

}  // namespace ccs
