#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include <nott/equivalence.hpp>

namespace nott {

// JSON shapes:
//   series     {"p": 3, "precision": 4, "coeffs": [0, 1, 1, 0]}
//   element    series fields plus "kind": "nottingham"
//   exponents  {"p": 3, "bound": 7, "exps": {"1": 3}}
//   character  {"p": 3, "bound": 7, "coeffs": {"2": 1, "7": 3}}
//   indicator  {"case": "m0"|"mid"|"m1", "values": [1, 1]}

nlohmann::json to_json(const FpSeries& z);
nlohmann::json to_json(const NottinghamElement& u);
nlohmann::json to_json(const UnitExponents& e);
nlohmann::json to_json(const Character& chi);
nlohmann::json to_json(const Indicator& ind);
nlohmann::json to_json(const BreakSequence& bs);
nlohmann::json to_json(const ClassReport& report);

FpSeries fpseries_from_json(const nlohmann::json& j);
NottinghamElement element_from_json(const nlohmann::json& j);
UnitExponents unit_exponents_from_json(const nlohmann::json& j);
Character character_from_json(const nlohmann::json& j);
Indicator indicator_from_json(const nlohmann::json& j);

// One-line summary:  p,m,case,weak_count,strict_count,lower_bound,upper_bound
std::string report_csv_header();
std::string report_csv_row(const ClassReport& report);

// Human-readable summary of a report.
std::string report_text(const ClassReport& report);

} // namespace nott
