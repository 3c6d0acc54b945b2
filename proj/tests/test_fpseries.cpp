#include <doctest.h>

#include <nott/fpseries.hpp>

#include "test_util.hpp"

using namespace nott;
using testutil::Rng;

namespace {

FpSeries s(u32 p, std::vector<u32> c) { return FpSeries(p, std::move(c)); }

} // namespace

TEST_CASE("construction validates and canonicalizes") {
    CHECK_THROWS_AS(FpSeries(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(FpSeries(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(FpSeries(3, std::vector<u32>{}), std::invalid_argument);
    CHECK(s(3, {4, 5})[0] == 1);
    CHECK(s(3, {4, 5})[1] == 2);
    CHECK(s(2, {1, 1}).p() == 2); // p = 2 is fine at this layer
    CHECK_THROWS_AS(s(3, {1, 2})[2], std::out_of_range);
}

TEST_CASE("add") {
    CHECK(add(s(3, {1, 1}), s(3, {2, 1})) == s(3, {0, 2}));
    const FpSeries f = s(3, {2, 0, 1, 2});
    CHECK(add(f, FpSeries(3, 4)) == f);
    CHECK(add(s(3, {1, 0, 2, 0}), s(3, {2, 0, 1, 0})) == FpSeries(3, 4));
    CHECK(add(s(3, {1, 1, 1}), s(3, {1, 1, 1, 1, 1})).precision() == 3);
    CHECK_THROWS_AS(add(s(3, {1}), s(5, {1})), std::invalid_argument);
}

TEST_CASE("mul") {
    CHECK(mul(s(3, {1, 1, 0, 0}), s(3, {1, 0, 1, 0})) == s(3, {1, 1, 1, 1}));
    const FpSeries f = s(3, {2, 1, 0, 2});
    CHECK(mul(f, FpSeries::one(3, 4)) == f);
    CHECK_THROWS_AS(mul(s(3, {1}), s(5, {1})), std::invalid_argument);
}

TEST_CASE("compose") {
    // f = 1 + t^2, g = t(1+t): f(g) = 1 + t^2 + 2t^3 + O(t^4)
    CHECK(compose(s(3, {1, 0, 1, 0}), s(3, {0, 1, 1, 0})) == s(3, {1, 0, 1, 2}));
    const FpSeries f = s(3, {2, 1, 2, 1});
    CHECK(compose(f, FpSeries::monomial(3, 1, 1, 4)) == f);
    const FpSeries g = s(3, {0, 2, 1, 2});
    CHECK(compose(FpSeries::monomial(3, 1, 1, 4), g) == g);
    CHECK_THROWS_AS(compose(f, s(3, {1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(s(3, {1, 1, 0, 0})) == s(3, {1, 2, 1, 2}));
    CHECK(reciprocal(FpSeries::one(3, 4)) == FpSeries::one(3, 4));
    CHECK_THROWS_AS(reciprocal(s(3, {0, 1})), std::domain_error);

    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        for (u32 p : {3u, 5u, 7u}) {
            auto c = testutil::random_coeffs(rng, p, 9);
            if (c[0] == 0) c[0] = 1;
            const FpSeries z(p, std::move(c));
            CHECK(mul(z, reciprocal(z)) == FpSeries::one(p, 9));
        }
    }
}

TEST_CASE("pow_unit") {
    CHECK(pow_unit(s(3, {1, 1, 0, 0}), 3) == s(3, {1, 0, 0, 1}));
    CHECK(pow_unit(s(3, {1, 2, 1, 2}), 0) == FpSeries::one(3, 4));
    CHECK(pow_unit(s(3, {1, 0, 1, 0, 0}), 2) == s(3, {1, 0, 2, 0, 1}));
    CHECK_THROWS_AS(pow_unit(s(3, {2, 1}), 2), std::domain_error);
}

TEST_CASE("ring axioms hold for random triples") {
    Rng rng(11);
    for (u32 p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 400; ++trial) {
            const FpSeries a = testutil::random_series(rng, p, 8);
            const FpSeries b = testutil::random_series(rng, p, 8);
            const FpSeries c = testutil::random_series(rng, p, 8);
            CHECK(add(a, b) == add(b, a));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(add(add(a, b), c) == add(a, add(b, c)));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        }
    }
}

TEST_CASE("composition is associative") {
    Rng rng(13);
    for (u32 p : {3u, 5u}) {
        for (int trial = 0; trial < 150; ++trial) {
            const FpSeries f = testutil::random_series(rng, p, 8);
            const FpSeries g = testutil::random_inner(rng, p, 8);
            const FpSeries h = testutil::random_inner(rng, p, 8);
            CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        }
    }
}

TEST_CASE("p-th powers land in degrees divisible by p") {
    Rng rng(17);
    for (u32 p : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const FpSeries z = testutil::random_unit(rng, p, 12);
            const FpSeries zp = pow_unit(z, p);
            for (std::size_t i = 0; i < zp.precision(); ++i) {
                if (i % p != 0) CHECK(zp[i] == 0);
            }
        }
    }
}
