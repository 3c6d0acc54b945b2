#pragma once

#include <cstddef>
#include <map>

#include <nott/fpseries.hpp>

namespace nott {

/// Exponent vector of a principal unit on the topological basis
/// {E_j = 1 + t^j : p coprime to j, j <= bound}, with exponents mod p^2.
/// Zero exponents are omitted from the map.
///
/// A series known mod t^{bound+1} determines the exponent of E_j mod p^2
/// only when the degree-pj digit is visible, i.e. pj <= bound; past that
/// ("tail" indices) the exponent is determined mod p. exponent_modulus
/// names the per-component modulus; characters never see the difference,
/// since a continuous character is divisible by p on every tail basis unit.
struct UnitExponents {
    u32 p = 0;
    u32 bound = 0;
    std::map<u32, u32> exps; // j -> c_j, canonical mod exponent_modulus(j)

    u32 at(u32 j) const {
        auto it = exps.find(j);
        return it == exps.end() ? 0 : it->second;
    }

    // p^2 while p*j <= bound, p afterwards.
    u32 exponent_modulus(u32 j) const { return p * j <= bound ? p * p : p; }

    friend bool operator==(const UnitExponents& a, const UnitExponents& b) = default;
};

// Exponents {c_j mod p^2} with z = prod E_j^{c_j} modulo U_{bound+1} and
// modulo factors E_j^{p^2 k}, which every character into Z/p^2 kills.
//
// Peeling: walk degrees k = 1..bound; write k = p^v j with p coprime to j.
// The coefficient a of t^k contributes a p^v to c_j ((1+t^j)^{p^v} = 1+t^k
// in characteristic p); contributions with v >= 2 vanish mod p^2 and are
// skipped. The factored part is divided off by multiplying with
// E_j^{p^v (p^2 - a)}.
//
// Requires z(0) = 1 and precision >= bound+1.
UnitExponents decompose(const FpSeries& z, u32 bound);

// prod_j E_j^{c_j} at the given precision, factors in increasing j.
// Requires precision >= bound+1.
FpSeries recompose(const UnitExponents& e, std::size_t precision);

// Componentwise sum, each component reduced by its own exponent modulus
// (the basis isomorphism is additive). Requires equal p and bound.
UnitExponents add(const UnitExponents& a, const UnitExponents& b);

} // namespace nott
