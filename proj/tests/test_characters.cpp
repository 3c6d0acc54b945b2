#include <doctest.h>

#include <nott/characters.hpp>

#include "test_util.hpp"

using namespace nott;
using testutil::Rng;

namespace {

Character chr(u32 p, u32 bound, std::map<u32, u32> coeffs) {
    return Character(p, bound, std::move(coeffs));
}

FpSeries basis_unit(u32 p, u32 j, std::size_t precision) {
    return add(FpSeries::one(p, precision), FpSeries::monomial(p, 1, j, precision));
}

} // namespace

TEST_CASE("character construction") {
    CHECK_THROWS_AS(chr(2, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(chr(3, 7, {{6, 1}}), std::invalid_argument); // p | 6
    CHECK_THROWS_AS(chr(3, 7, {{8, 1}}), std::invalid_argument); // beyond bound
    CHECK_THROWS_AS(chr(3, 7, {{0, 1}}), std::invalid_argument);
    const auto chi = chr(3, 7, {{1, 9}, {2, 10}});
    CHECK(chi.coeff(1) == 0); // reduced mod p^2 and dropped
    CHECK(chi.coeff(2) == 1);
    CHECK(chi.coeffs().size() == 1);
}

TEST_CASE("support") {
    CHECK(character_support(3, 7) == std::vector<u32>{1, 2, 4, 5, 7});
    CHECK(character_support(5, 6) == std::vector<u32>{1, 2, 3, 4, 6});
}

TEST_CASE("evaluate") {
    const auto chi = chr(3, 7, {{1, 1}, {2, 1}, {7, 3}});
    CHECK(evaluate(chi, FpSeries(3, {1, 0, 0, 1, 0, 0, 0, 0})) == 3); // 1+t^3 = E_1^3
    CHECK(evaluate(chi, FpSeries::one(3, 8)) == 0);
    for (u32 j : {1u, 2u, 7u}) {
        CHECK(evaluate(chi, basis_unit(3, j, 8)) == chi.coeff(j));
    }
    CHECK_THROWS_AS(evaluate(chi, FpSeries::one(3, 7)), std::invalid_argument);
}

TEST_CASE("evaluate kills the bound-th filtration step and is additive") {
    Rng rng(43);
    for (u32 p : {3u, 5u}) {
        const u32 m = 2 * p + 1;
        for (int trial = 0; trial < 100; ++trial) {
            const Character chi = testutil::random_character(rng, p, 2, m);
            // unit congruent to 1 mod t^{m+1}
            auto c = testutil::random_coeffs(rng, p, m + 5);
            for (u32 i = 0; i <= m; ++i) c[i] = 0;
            c[0] = 1;
            CHECK(evaluate(chi, FpSeries(p, std::move(c))) == 0);

            const FpSeries z = testutil::random_unit(rng, p, m + 1);
            const FpSeries w = testutil::random_unit(rng, p, m + 1);
            const u32 sum = add_mod(evaluate(chi, z), evaluate(chi, w), p * p);
            CHECK(evaluate(chi, mul(z, w)) == sum);
        }
    }
}

TEST_CASE("act on pinned inputs") {
    const auto chi = chr(3, 7, {{1, 1}, {2, 1}, {7, 3}});
    CHECK(act(NottinghamElement::identity(3, 8), chi) == chi);

    const auto u = NottinghamElement::from_tail(3, {1}, 8); // t(1+t)
    const Character moved = act(u, chi);
    CHECK(moved.coeff(1) % 3 == 2); // x1 + alpha*x2 = 1 + 1
    CHECK(moved.coeff(2) % 3 == 1); // x2 unchanged mod p
    CHECK(moved.coeff(7) == 3);     // p*a_m unchanged mod p^2

    CHECK_THROWS_AS(act(NottinghamElement::identity(3, 7), chi), std::invalid_argument);
}

TEST_CASE("action composes contravariantly on the inner slot") {
    // Pinned orientation: act(compose(u, v), chi) == act(u, act(v, chi)),
    // exhaustive over lifted pairs from the p=3, N=4 quotient.
    Rng rng(47);
    std::vector<Character> samples;
    for (int i = 0; i < 3; ++i) samples.push_back(testutil::random_character(rng, 3, 2, 7));
    for (u32 a1 = 0; a1 < 3; ++a1) {
        for (u32 a2 = 0; a2 < 3; ++a2) {
            const auto u = NottinghamElement::from_tail(3, {a1, a2}, 9);
            for (u32 b1 = 0; b1 < 3; ++b1) {
                for (u32 b2 = 0; b2 < 3; ++b2) {
                    const auto v = NottinghamElement::from_tail(3, {b1, b2}, 9);
                    for (const auto& chi : samples) {
                        CHECK(act(compose(u, v), chi) == act(u, act(v, chi)));
                    }
                }
            }
        }
    }
}

TEST_CASE("break sequence") {
    CHECK(break_sequence(chr(3, 7, {{2, 1}, {7, 3}})) == BreakSequence{2, 7});
    // the second break of {2: 1} is realized by E_2^3 in U_6
    CHECK(break_sequence(chr(3, 7, {{2, 1}})) == BreakSequence{2, 6});
    CHECK(break_sequence(chr(3, 3, {{1, 1}})) == BreakSequence{1, 3});
    CHECK(break_sequence(chr(3, 7, {{2, 1}, {5, 6}})) == BreakSequence{2, 6});
    CHECK_THROWS_AS(break_sequence(chr(3, 7, {{4, 3}})), std::domain_error);
    CHECK_THROWS_AS(break_sequence(chr(3, 7, {})), std::domain_error);
}

TEST_CASE("validate_type") {
    CHECK(validate_type(3, 2, 6));
    CHECK_FALSE(validate_type(3, 2, 5)); // 5 < p*b0
    CHECK_FALSE(validate_type(3, 2, 9)); // strict but divisible by p
    CHECK_FALSE(validate_type(3, 3, 9)); // b0 divisible by p
    CHECK(validate_type(3, 1, 3));
    CHECK(type_violation(3, 2, 6).empty());
    CHECK(type_violation(3, 2, 5).find("b1 >= p*b0") != std::string::npos);
}

TEST_CASE("standard expansion") {
    const auto se = standard_expansion(chr(3, 7, {{1, 4}, {2, 1}, {7, 3}}));
    CHECK(se.m == 7);
    CHECK(se.x1 == 1);
    CHECK(se.x2 == 1);
    CHECK(se.a_at(1) == 1);
    CHECK(se.a_at(2) == 0);
    CHECK(se.a_at(7) == 1);

    const auto se2 = standard_expansion(chr(3, 7, {{2, 7}, {7, 3}}));
    CHECK(se2.x2 == 1); // 7 = 1 + 3*2
    CHECK(se2.a_at(2) == 2);

    CHECK_THROWS_AS(standard_expansion(chr(3, 3, {{1, 1}})), std::domain_error);
}

TEST_CASE("indicator of type <2,m>") {
    const Indicator i1 = indicator(chr(3, 7, {{2, 1}, {7, 3}}));
    CHECK(i1.kind == Indicator::Case::m1);
    CHECK(i1.values == std::vector<u32>{1, 1});

    const Indicator i2 = indicator(chr(3, 8, {{2, 1}, {8, 3}}));
    CHECK(i2.kind == Indicator::Case::mid);
    CHECK(i2.values == std::vector<u32>{1, 1, 0});

    const Indicator i3 = indicator(chr(3, 6, {{1, 1}, {2, 1}}));
    CHECK(i3.kind == Indicator::Case::m0);
    CHECK(i3.values == std::vector<u32>{1, 1});
}

TEST_CASE("indicator of type <1,m>") {
    const Indicator i1 = indicator_1m(chr(3, 3, {{1, 1}, {2, 6}}));
    CHECK(i1.kind == Indicator::Case::m0);
    CHECK(i1.values == std::vector<u32>{1, 2});

    const Indicator i2 = indicator_1m(chr(3, 4, {{1, 2}, {4, 3}}));
    CHECK(i2.kind == Indicator::Case::m1);
    CHECK(i2.values == std::vector<u32>{2, 1, 0});

    const Indicator i3 = indicator_1m(chr(3, 5, {{1, 1}, {5, 3}}));
    CHECK(i3.kind == Indicator::Case::mid);
    CHECK(i3.values == std::vector<u32>{1, 1, 0});

    CHECK_THROWS_AS(indicator_1m(chr(3, 7, {{2, 1}, {7, 3}})), std::domain_error);
}

TEST_CASE("enumeration counts and membership") {
    CHECK(character_count(3, 2, 7) == 972); // 9 * 6 * 3 * 3 * 2
    CHECK(character_count(3, 2, 6) == 486); // 9 * 6 * 3 * 3
    CHECK(character_count(3, 2, 8) == 2916);
    CHECK(enumerate_characters(3, 2, 7).size() == 972);

    const auto family6 = enumerate_characters(3, 2, 6);
    CHECK(family6.size() == 486);
    // every member really is of type <2,6>, including the all-zero tail
    const Character sparse = chr(3, 6, {{2, 1}});
    CHECK(std::find(family6.begin(), family6.end(), sparse) != family6.end());
    for (const auto& chi : family6) CHECK(break_sequence(chi) == BreakSequence{2, 6});

    CHECK(enumerate_characters(3, 1, 3).size() == 18);
    CHECK(enumerate_characters(3, 1, 4).size() == 36);
    CHECK_THROWS_AS(enumerate_characters(3, 2, 5), std::invalid_argument);
}

TEST_CASE("profiles round-trip and action table matches act") {
    Rng rng(53);
    for (u32 p : {3u, 5u}) {
        const u32 m = 2 * p + 2;
        for (int trial = 0; trial < 50; ++trial) {
            const Character chi = testutil::random_character(rng, p, 2, m);
            CHECK(character_from_profile(p, m, profile(chi)) == chi);

            const auto u = testutil::random_element(rng, p, m + 2);
            const ActionTable table(u, m);
            CHECK(table.apply(profile(chi)) == profile(act(u, chi)));
        }
    }
}

TEST_CASE("the action preserves the break sequence") {
    Rng rng(59);
    for (u32 p : {3u, 5u}) {
        for (u32 m : {2 * p, 2 * p + 1, 2 * p + 2}) {
            for (int trial = 0; trial < 60; ++trial) {
                const Character chi = testutil::random_character(rng, p, 2, m);
                const auto u = testutil::random_element(rng, p, m + 2);
                CHECK(break_sequence(act(u, chi)) == BreakSequence{2, m});
            }
        }
    }
}

TEST_CASE("transport identities for the standard coordinates") {
    Rng rng(61);
    for (u32 p : {3u, 5u}) {
        // all three residue cases of m, including m = 2p
        for (u32 m : {2 * p, 2 * p + 1, 2 * p + 2, 3 * p + 1}) {
            if (!validate_type(p, 2, m)) continue;
            for (int trial = 0; trial < 60; ++trial) {
                const Character chi = testutil::random_character(rng, p, 2, m);
                const auto u = testutil::random_element(rng, p, m + 2);
                const StandardExpansion before = standard_expansion(chi);
                const Character moved = act(u, chi);
                const StandardExpansion after = standard_expansion(moved);
                const u32 alpha = u.alpha(1);

                // (a) first two coefficients mod p
                CHECK(after.x1 == add_mod(before.x1, mul_mod(alpha, before.x2, p), p));
                CHECK(after.x2 == before.x2);
                if (m % p != 0) {
                    // (b) top coefficient is fixed
                    CHECK(moved.coeff(m) == p * before.a_at(m));
                }
                if (m % p != 0 && m % p != 1) {
                    // (c) next-to-top moves by (m-1) alpha a_m
                    const u32 shift = mul_mod(mul_mod((m - 1) % p, alpha, p), before.a_at(m), p);
                    CHECK(after.a_at(m - 1) == add_mod(before.a_at(m - 1), shift, p));
                }
                if (m % p == 0) {
                    // (d) next-to-top moves by eta x2 with eta^p = (m-1) alpha
                    const u32 eta = mul_mod((m - 1) % p, alpha, p);
                    const u32 shift = mul_mod(eta, before.x2, p);
                    CHECK(after.a_at(m - 1) == add_mod(before.a_at(m - 1), shift, p));
                }
            }
        }
    }
}

TEST_CASE("the indicator is invariant under the action") {
    Rng rng(67);
    for (u32 p : {3u, 5u}) {
        for (u32 m : {2 * p, 2 * p + 1, 2 * p + 2}) {
            for (int trial = 0; trial < 60; ++trial) {
                const Character chi = testutil::random_character(rng, p, 2, m);
                const auto u = testutil::random_element(rng, p, m + 2);
                const Indicator before = indicator(chi);
                const Indicator after = indicator(act(u, chi));
                CHECK(after == before);
                CHECK(after.values.back() == before.values.back()); // ind_0 in particular
            }
        }
    }
}
