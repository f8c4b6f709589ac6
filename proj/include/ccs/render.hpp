#pragma once

#include <json.hpp>

#include <string>

#include "ccs/chow.hpp"
#include "ccs/classes.hpp"

namespace ccs {

// "a*H^k" terms in increasing H-power, joined by " + " / " - "; "H" for k=1,
// bare integer for k=0, "0" for the zero class.
std::string render_chow_text(const ChowClass& c);

// {"n": n, "coefficients": [a_0..a_n]}
nlohmann::json render_chow_json(const ChowClass& c);

nlohmann::json mpz_to_json(const mpz_class& v);

std::string render_report_text(const ClassReport& rep);
nlohmann::json render_report_json(const ClassReport& rep);

std::string render_degrees_text(const std::vector<mpz_class>& g);
nlohmann::json render_degrees_json(const std::vector<mpz_class>& g);

}  // namespace ccs
