#include <nott/json_io.hpp>

#include <sstream>
#include <stdexcept>

namespace nott {

using nlohmann::json;

namespace {

json map_to_json(const std::map<u32, u32>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

std::map<u32, u32> map_from_json(const json& j) {
    std::map<u32, u32> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out[static_cast<u32>(std::stoul(it.key()))] = it.value().get<u32>();
    }
    return out;
}

Indicator::Case case_from_string(const std::string& s) {
    if (s == "m0") return Indicator::Case::m0;
    if (s == "mid") return Indicator::Case::mid;
    if (s == "m1") return Indicator::Case::m1;
    throw std::invalid_argument("indicator case must be one of m0, mid, m1");
}

std::string case_of(u32 p, u32 m) {
    if (m % p == 0) return "m0";
    if (m % p == 1) return "m1";
    return "mid";
}

} // namespace

json to_json(const FpSeries& z) {
    return json{{"p", z.p()}, {"precision", z.precision()}, {"coeffs", z.coeffs()}};
}

json to_json(const NottinghamElement& u) {
    json j = to_json(u.series());
    j["kind"] = "nottingham";
    return j;
}

json to_json(const UnitExponents& e) {
    return json{{"p", e.p}, {"bound", e.bound}, {"exps", map_to_json(e.exps)}};
}

json to_json(const Character& chi) {
    return json{{"p", chi.p()}, {"bound", chi.bound()}, {"coeffs", map_to_json(chi.coeffs())}};
}

json to_json(const Indicator& ind) {
    return json{{"case", to_string(ind.kind)}, {"values", ind.values}};
}

json to_json(const BreakSequence& bs) {
    return json{{"b0", bs.b0}, {"b1", bs.b1}};
}

json to_json(const ClassReport& report) {
    json j{{"p", report.p},
           {"m", report.m},
           {"b0", report.b0},
           {"method", to_string(report.method)},
           {"total_characters", report.total_characters},
           {"weak_count", report.weak_count}};
    if (report.strict_count) j["strict_count"] = *report.strict_count;
    j["weak_classes"] = json::array();
    for (const auto& wc : report.weak_classes) {
        j["weak_classes"].push_back(json{{"indicator", to_json(wc.indicator)},
                                         {"size", wc.size},
                                         {"representative", to_json(wc.representative)}});
    }
    j["strict_classes"] = json::array();
    for (const auto& sc : report.strict_classes) {
        j["strict_classes"].push_back(json{{"representative", to_json(sc.representative)},
                                           {"size", sc.size},
                                           {"weak_class", sc.weak_class}});
    }
    j["issues"] = json::array();
    for (const auto& issue : report.issues) {
        j["issues"].push_back(json{{"check", issue.check}, {"witness", issue.witness}});
    }
    return j;
}

FpSeries fpseries_from_json(const json& j) {
    return FpSeries(j.at("p").get<u32>(), j.at("coeffs").get<std::vector<u32>>());
}

NottinghamElement element_from_json(const json& j) {
    if (j.contains("kind") && j.at("kind") != "nottingham") {
        throw std::invalid_argument("element_from_json: kind is not nottingham");
    }
    return NottinghamElement(fpseries_from_json(j));
}

UnitExponents unit_exponents_from_json(const json& j) {
    return UnitExponents{j.at("p").get<u32>(), j.at("bound").get<u32>(),
                         map_from_json(j.at("exps"))};
}

Character character_from_json(const json& j) {
    return Character(j.at("p").get<u32>(), j.at("bound").get<u32>(),
                     map_from_json(j.at("coeffs")));
}

Indicator indicator_from_json(const json& j) {
    Indicator ind;
    ind.kind = case_from_string(j.at("case").get<std::string>());
    ind.values = j.at("values").get<std::vector<u32>>();
    return ind;
}

std::string report_csv_header() {
    return "p,m,case,weak_count,strict_count,lower_bound,upper_bound";
}

std::string report_csv_row(const ClassReport& report) {
    std::ostringstream os;
    os << report.p << "," << report.m << "," << case_of(report.p, report.m) << ","
       << report.weak_count << ",";
    if (report.strict_count) os << *report.strict_count;
    os << "," << report.weak_count << "," << report.p * report.weak_count;
    return os.str();
}

std::string report_text(const ClassReport& report) {
    std::ostringstream os;
    os << "type <" << report.b0 << "," << report.m << "> over F_" << report.p << ": "
       << report.total_characters << " characters (" << to_string(report.method) << ")\n";
    os << "weak classes: " << report.weak_count << "\n";
    for (std::size_t c = 0; c < report.weak_classes.size(); ++c) {
        const auto& wc = report.weak_classes[c];
        os << "  [" << c << "] size " << wc.size << ", indicator " << to_json(wc.indicator).dump()
           << ", representative " << to_json(wc.representative)["coeffs"].dump() << "\n";
    }
    if (report.strict_count) {
        os << "strict classes: " << *report.strict_count << " (bracket [" << report.weak_count
           << ", " << report.p * report.weak_count << "])\n";
        for (const auto& sc : report.strict_classes) {
            os << "  size " << sc.size << ", weak class " << sc.weak_class << ", representative "
               << to_json(sc.representative)["coeffs"].dump() << "\n";
        }
    }
    if (report.issues.empty()) {
        os << "verification: ok\n";
    } else {
        os << "verification FAILED:\n";
        for (const auto& issue : report.issues) {
            os << "  " << issue.check << ": " << issue.witness << "\n";
        }
    }
    return os.str();
}

} // namespace nott
