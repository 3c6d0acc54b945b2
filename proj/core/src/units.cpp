#include <nott/units.hpp>

#include <stdexcept>

namespace nott {

UnitExponents decompose(const FpSeries& z, u32 bound) {
    if (bound == 0) throw std::invalid_argument("decompose: bound must be positive");
    if (z[0] != 1) throw std::domain_error("decompose: not a principal unit");
    if (z.precision() < static_cast<std::size_t>(bound) + 1) {
        throw std::invalid_argument("decompose: precision too small for bound");
    }
    const u32 p = z.p();
    const u32 p2 = p * p;
    const std::size_t prec = bound + 1;

    FpSeries work = truncate(z, prec);
    UnitExponents out{p, bound, {}};
    for (u32 k = 1; k <= bound; ++k) {
        const u32 a = work[k];
        if (a == 0) continue;
        const auto [v, j] = split_p(k, p);
        if (v >= 2) continue; // contributes a*p^v = 0 mod p^2
        const u32 pv = (v == 0) ? 1 : p;
        const u32 c = add_mod(out.at(j), mul_mod(a, pv, p2), p2);
        if (c == 0) out.exps.erase(j); else out.exps[j] = c;
        // divide by (1+t^j)^{a p^v}: the surplus factor E_j^{p^{v+2}} only
        // touches exponents divisible by p^2 and degrees k p^2 handled later.
        const FpSeries ej = FpSeries::monomial(p, 1, j, prec) + FpSeries::one(p, prec);
        work = mul(work, pow_unit(ej, static_cast<u64>(pv) * (p2 - a)));
    }
    return out;
}

FpSeries recompose(const UnitExponents& e, std::size_t precision) {
    if (precision < static_cast<std::size_t>(e.bound) + 1) {
        throw std::invalid_argument("recompose: precision too small for bound");
    }
    FpSeries acc = FpSeries::one(e.p, precision);
    for (const auto& [j, c] : e.exps) {
        const FpSeries ej = FpSeries::monomial(e.p, 1, j, precision) + FpSeries::one(e.p, precision);
        acc = mul(acc, pow_unit(ej, c));
    }
    return acc;
}

UnitExponents add(const UnitExponents& a, const UnitExponents& b) {
    if (a.p != b.p || a.bound != b.bound) {
        throw std::invalid_argument("UnitExponents add: mismatched p or bound");
    }
    UnitExponents out{a.p, a.bound, a.exps};
    for (const auto& [j, c] : b.exps) {
        const u32 mod = out.exponent_modulus(j);
        const u32 s = (out.at(j) % mod + c % mod) % mod;
        if (s == 0) out.exps.erase(j); else out.exps[j] = s;
    }
    return out;
}

} // namespace nott
