#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <nott/json_io.hpp>

#include "verify_suites.hpp"

namespace {

using namespace nott;

// exit codes: 0 success, 1 usage/parse error, 2 verification mismatch,
// 3 budget exceeded

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return nlohmann::json::parse(in);
}

int emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 1;
    }
    out << content;
    if (content.empty() || content.back() != '\n') out << "\n";
    return 0;
}

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
};

int cmd_enumerate(u32 p, u32 m, u32 b0, const std::string& relation, const OrbitOptions& orbit,
                  const CommonOpts& io) {
    if (b0 != 1 && b0 != 2) {
        std::cerr << "only types <1,m> and <2,m> are enumerable (got b0 = " << b0 << ")\n";
        return 1;
    }
    if (const std::string violation = type_violation(p, b0, m); !violation.empty()) {
        std::cerr << "invalid type <" << b0 << "," << m << ">: " << violation << "\n";
        return 1;
    }
    std::cerr << "type <" << b0 << "," << m << "> over F_" << p << ": "
              << character_count(p, b0, m) << " characters, relation " << relation << "\n";
    try {
        const ClassReport report = (b0 == 1) ? strict_classes_1m(p, m, orbit)
                                   : (relation == "strict")
                                       ? strict_classes_bruteforce(p, m, orbit)
                                       : weak_orbits_bruteforce(p, m, orbit);
        std::string content;
        if (io.format == "json") {
            content = to_json(report).dump(2);
        } else if (io.format == "csv") {
            content = report_csv_header() + "\n" + report_csv_row(report);
        } else {
            content = report_text(report);
        }
        if (emit(content, io.out_path) != 0) return 1;
        if (!report.ok()) {
            for (const auto& issue : report.issues) {
                std::cerr << "verification failure: " << issue.check << " -- " << issue.witness
                          << "\n";
            }
            return 2;
        }
        return 0;
    } catch (const budget_exceeded& e) {
        std::cerr << e.what() << "; nothing was written, raise --budget to proceed\n";
        return 3;
    }
}

int cmd_verify(const std::string& suite, const suites::SuiteConfig& config) {
    try {
        const int failed = suites::run(suite, config);
        return failed == 0 ? 0 : 2;
    } catch (const budget_exceeded& e) {
        std::cerr << e.what() << "; raise --budget to proceed\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\nknown suites:";
        for (const auto& name : suites::names()) std::cerr << " " << name;
        std::cerr << "\n";
        return 1;
    }
}

int cmd_act(const std::string& character_path, const std::string& element_path,
            const CommonOpts& io) {
    const Character chi = character_from_json(load_json(character_path));
    const NottinghamElement u = element_from_json(load_json(element_path));
    const Character moved = act(u, chi);
    const BreakSequence bs = break_sequence(moved);
    nlohmann::json j{{"character", to_json(moved)}, {"break_sequence", to_json(bs)}};
    std::optional<Indicator> ind;
    if (bs.b0 == 2) ind = indicator(moved);
    if (bs.b0 == 1) ind = indicator_1m(moved);
    if (ind) j["indicator"] = to_json(*ind);

    if (io.format == "json") return emit(j.dump(2), io.out_path);
    std::ostringstream os;
    os << "character: " << to_json(moved)["coeffs"].dump() << "\n";
    os << "break sequence: <" << bs.b0 << "," << bs.b1 << ">\n";
    if (ind) os << "indicator: " << to_json(*ind).dump() << "\n";
    return emit(os.str(), io.out_path);
}

int cmd_order(const std::string& element_path, const CommonOpts& io) {
    const NottinghamElement u = element_from_json(load_json(element_path));
    const std::size_t order = order_in_quotient(u, u.precision());
    const auto d = depth(u);
    nlohmann::json j{{"order", order}, {"precision", u.precision()}};
    if (d) {
        j["depth"] = *d;
        j["first_divergent_degree"] = *d + 1;
    } else {
        j["depth"] = nullptr;
        j["first_divergent_degree"] = nullptr;
    }
    if (io.format == "json") return emit(j.dump(2), io.out_path);
    std::ostringstream os;
    os << "order " << order << " in the quotient mod t^" << u.precision() << "\n";
    if (d) {
        os << "first divergent degree " << (*d + 1) << " (depth " << *d << ")\n";
    } else {
        os << "identity at this precision\n";
    }
    return emit(os.str(), io.out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nottingham group p^2-torsion: character families, indicators, orbit oracles"};
    app.require_subcommand(1);

    u32 p = 3;
    u32 m = 0;
    u32 b0 = 2;
    std::string relation = "weak";
    std::string suite;
    std::string format = "json";
    std::string out_path;
    std::string character_path;
    std::string element_path;
    u64 seed = 42;
    OrbitOptions orbit;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };
    auto add_orbit = [&](CLI::App* cmd) {
        cmd->add_option("--budget", orbit.budget, "cap on action evaluations");
        cmd->add_option("--threads", orbit.threads, "worker threads for enumeration");
    };

    auto* enumerate = app.add_subcommand("enumerate", "classify one character family");
    enumerate->add_option("--p", p, "odd prime")->required();
    enumerate->add_option("--m", m, "second break b1")->required();
    enumerate->add_option("--b0", b0, "first break (default 2)");
    enumerate->add_option("--relation", relation, "weak or strict")
        ->check(CLI::IsMember({"weak", "strict"}));
    add_orbit(enumerate);
    add_io(enumerate);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--p", p, "odd prime");
    auto* verify_m = verify->add_option("--m", m, "restrict to one m");
    verify->add_option("--seed", seed, "seed for randomized suites");
    add_orbit(verify);

    auto* act_cmd = app.add_subcommand("act", "transport a character along an element");
    act_cmd->add_option("--character", character_path, "character JSON file")->required();
    act_cmd->add_option("--element", element_path, "element JSON file")->required();
    add_io(act_cmd);

    auto* order_cmd = app.add_subcommand("order", "composition order in the finite quotient");
    order_cmd->add_option("--element", element_path, "element JSON file")->required();
    add_io(order_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate->parsed()) {
            return cmd_enumerate(p, m, b0, relation, orbit, CommonOpts{format, out_path});
        }
        if (verify->parsed()) {
            suites::SuiteConfig config;
            config.p = p;
            if (verify_m->count() > 0) config.m = m;
            config.seed = seed;
            config.orbit = orbit;
            return cmd_verify(suite, config);
        }
        if (act_cmd->parsed()) return cmd_act(character_path, element_path, CommonOpts{format, out_path});
        if (order_cmd->parsed()) return cmd_order(element_path, CommonOpts{format, out_path});
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
