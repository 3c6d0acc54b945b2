#pragma once

#include <map>
#include <random>
#include <vector>

#include <nott/characters.hpp>

namespace nott::sampling {

using Rng = std::mt19937_64;

inline std::vector<u32> coeffs(Rng& rng, u32 p, std::size_t n) {
    std::uniform_int_distribution<u32> d(0, p - 1);
    std::vector<u32> c(n);
    for (auto& x : c) x = d(rng);
    return c;
}

inline FpSeries series(Rng& rng, u32 p, std::size_t precision) {
    return FpSeries(p, coeffs(rng, p, precision));
}

// zero constant term, composable on the inside
inline FpSeries inner(Rng& rng, u32 p, std::size_t precision) {
    auto c = coeffs(rng, p, precision);
    c[0] = 0;
    return FpSeries(p, std::move(c));
}

inline FpSeries unit(Rng& rng, u32 p, std::size_t precision) {
    auto c = coeffs(rng, p, precision);
    c[0] = 1;
    return FpSeries(p, std::move(c));
}

inline NottinghamElement element(Rng& rng, u32 p, std::size_t precision) {
    auto c = coeffs(rng, p, precision);
    c[0] = 0;
    c[1] = 1;
    return NottinghamElement(FpSeries(p, std::move(c)));
}

// uniform over the type-<b0,m> coefficient constraint sets
inline Character character(Rng& rng, u32 p, u32 b0, u32 m) {
    std::uniform_int_distribution<u32> mod_p2(0, p * p - 1);
    std::uniform_int_distribution<u32> mod_p(0, p - 1);
    std::uniform_int_distribution<u32> nonzero(1, p - 1);
    std::map<u32, u32> out;
    for (u32 j : character_support(p, m)) {
        u32 v;
        if (j < b0) {
            v = mod_p2(rng);
        } else if (j == b0) {
            do {
                v = mod_p2(rng);
            } while (v % p == 0);
        } else if (j == m) {
            v = p * nonzero(rng);
        } else {
            v = p * mod_p(rng);
        }
        if (v != 0) out[j] = v;
    }
    return Character(p, m, std::move(out));
}

} // namespace nott::sampling
