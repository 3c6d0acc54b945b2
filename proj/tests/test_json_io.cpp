#include <doctest.h>

#include <nott/json_io.hpp>

#include "test_util.hpp"

using namespace nott;
using testutil::Rng;

TEST_CASE("series json shape and round trip") {
    const FpSeries z(3, {0, 1, 2, 0});
    const auto j = to_json(z);
    CHECK(j["p"] == 3);
    CHECK(j["precision"] == 4);
    CHECK(j["coeffs"] == nlohmann::json::array({0, 1, 2, 0}));
    CHECK(fpseries_from_json(j) == z);
}

TEST_CASE("element json carries its kind") {
    const auto u = NottinghamElement::from_tail(3, {1, 2}, 5);
    auto j = to_json(u);
    CHECK(j["kind"] == "nottingham");
    CHECK(element_from_json(j) == u);
    j["kind"] = "other";
    CHECK_THROWS_AS(element_from_json(j), std::invalid_argument);
}

TEST_CASE("exponents and characters use string keys") {
    const UnitExponents e{3, 7, {{1, 3}, {7, 8}}};
    const auto je = to_json(e);
    CHECK(je["exps"]["1"] == 3);
    CHECK(unit_exponents_from_json(je) == e);

    const Character chi(3, 7, {{2, 1}, {7, 3}});
    const auto jc = to_json(chi);
    CHECK(jc["bound"] == 7);
    CHECK(jc["coeffs"]["7"] == 3);
    CHECK(character_from_json(jc) == chi);
}

TEST_CASE("indicator json") {
    const Indicator ind{Indicator::Case::m1, {1, 2}};
    const auto j = to_json(ind);
    CHECK(j["case"] == "m1");
    CHECK(indicator_from_json(j) == ind);
}

TEST_CASE("random round trips") {
    Rng rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        const FpSeries z = testutil::random_series(rng, 5, 9);
        CHECK(fpseries_from_json(to_json(z)) == z);
        const auto u = testutil::random_element(rng, 5, 9);
        CHECK(element_from_json(to_json(u)) == u);
        const Character chi = testutil::random_character(rng, 5, 2, 11);
        CHECK(character_from_json(to_json(chi)) == chi);
    }
}

TEST_CASE("report serialization") {
    const ClassReport report = strict_classes_bruteforce(3, 6);
    const auto j = to_json(report);
    CHECK(j["p"] == 3);
    CHECK(j["m"] == 6);
    CHECK(j["weak_count"] == report.weak_count);
    CHECK(j["strict_count"] == *report.strict_count);
    CHECK(j["weak_classes"].size() == report.weak_count);
    // weak class representatives round-trip through the character parser
    for (const auto& wc : j["weak_classes"]) {
        const Character rep = character_from_json(wc["representative"]);
        CHECK(break_sequence(rep) == BreakSequence{2, 6});
    }

    const std::string row = report_csv_row(report);
    CHECK(report_csv_header() == "p,m,case,weak_count,strict_count,lower_bound,upper_bound");
    CHECK(row.substr(0, 9) == "3,6,m0,6,");
    const std::string text = report_text(report);
    CHECK(text.find("weak classes: 6") != std::string::npos);
    CHECK(text.find("verification: ok") != std::string::npos);
}
