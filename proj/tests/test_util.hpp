#pragma once

#include <nott/sampling.hpp>

namespace nott::testutil {

using Rng = sampling::Rng;

inline std::vector<u32> random_coeffs(Rng& rng, u32 p, std::size_t n) {
    return sampling::coeffs(rng, p, n);
}

inline FpSeries random_series(Rng& rng, u32 p, std::size_t precision) {
    return sampling::series(rng, p, precision);
}

inline FpSeries random_inner(Rng& rng, u32 p, std::size_t precision) {
    return sampling::inner(rng, p, precision);
}

inline FpSeries random_unit(Rng& rng, u32 p, std::size_t precision) {
    return sampling::unit(rng, p, precision);
}

inline NottinghamElement random_element(Rng& rng, u32 p, std::size_t precision) {
    return sampling::element(rng, p, precision);
}

inline Character random_character(Rng& rng, u32 p, u32 b0, u32 m) {
    return sampling::character(rng, p, b0, m);
}

} // namespace nott::testutil
