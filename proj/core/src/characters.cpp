#include <nott/characters.hpp>

#include <algorithm>
#include <stdexcept>

namespace nott {

Character::Character(u32 p, u32 bound, std::map<u32, u32> coeffs)
    : p_(p), bound_(bound), coeffs_(std::move(coeffs)) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("Character: p must be an odd prime");
    if (bound == 0) throw std::invalid_argument("Character: bound must be positive");
    const u32 p2 = p * p;
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const u32 j = it->first;
        if (j == 0 || j > bound_ || j % p == 0) {
            throw std::invalid_argument("Character: index " + std::to_string(j) +
                                        " is not a basis index for this bound");
        }
        it->second %= p2;
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }
}

std::string to_string(Indicator::Case c) {
    switch (c) {
        case Indicator::Case::m0: return "m0";
        case Indicator::Case::mid: return "mid";
        case Indicator::Case::m1: return "m1";
    }
    return "?";
}

std::vector<u32> character_support(u32 p, u32 m) {
    std::vector<u32> out;
    out.reserve(m);
    for (u32 j = 1; j <= m; ++j) {
        if (j % p != 0) out.push_back(j);
    }
    return out;
}

u32 evaluate(const Character& chi, const FpSeries& z) {
    if (z.p() != chi.p()) throw std::invalid_argument("evaluate: modulus mismatch");
    const u32 p2 = chi.p() * chi.p();
    const UnitExponents e = decompose(z, chi.bound());
    u32 acc = 0;
    for (const auto& [j, c] : e.exps) {
        acc = add_mod(acc, mul_mod(c, chi.coeff(j), p2), p2);
    }
    return acc;
}

Character act(const NottinghamElement& u, const Character& chi) {
    if (u.p() != chi.p()) throw std::invalid_argument("act: modulus mismatch");
    const u32 bound = chi.bound();
    if (u.precision() < static_cast<std::size_t>(bound) + 1) {
        throw std::invalid_argument("act: element precision too small for the character bound");
    }
    const u32 p = chi.p();
    const FpSeries us = truncate(u.series(), bound + 1);
    const FpSeries one = FpSeries::one(p, bound + 1);

    std::map<u32, u32> out;
    FpSeries upow = one;
    for (u32 j = 1; j <= bound; ++j) {
        upow = mul(upow, us);
        if (j % p == 0) continue;
        const u32 value = evaluate(chi, add(one, upow)); // chi(E_j o u) = chi(1 + u^j)
        if (value != 0) out[j] = value;
    }
    return Character(p, bound, std::move(out));
}

BreakSequence break_sequence(const Character& chi) {
    const u32 p = chi.p();
    u32 b0 = 0;
    u32 max_nonzero = 0;
    for (const auto& [j, v] : chi.coeffs()) {
        max_nonzero = std::max(max_nonzero, j);
        if (v % p != 0) b0 = std::max(b0, j);
    }
    if (b0 == 0) {
        throw std::domain_error("break_sequence: character is not surjective onto Z/p^2");
    }
    // The b1 break is realized either by a basis unit with nonzero value or
    // by the p-th power of the unit at b0 (value p * invertible).
    const u32 b1 = std::max(max_nonzero, p * b0);
    BreakSequence bs{b0, b1};
    if (!validate_type(p, bs.b0, bs.b1)) {
        throw std::logic_error("break_sequence: computed sequence violates admissibility");
    }
    return bs;
}

bool validate_type(u32 p, u32 b0, u32 b1) {
    return type_violation(p, b0, b1).empty();
}

std::string type_violation(u32 p, u32 b0, u32 b1) {
    if (b0 == 0 || b1 == 0) return "breaks must be positive";
    if (b0 % p == 0) {
        return "b0 = " + std::to_string(b0) + " must be coprime to p = " + std::to_string(p);
    }
    if (b1 < p * b0) {
        return "b1 >= p*b0 required (" + std::to_string(b1) + " < " + std::to_string(p * b0) + ")";
    }
    if (b1 > p * b0 && b1 % p == 0) {
        return "b1 = " + std::to_string(b1) + " exceeds p*b0, so it must be coprime to p";
    }
    return {};
}

StandardExpansion standard_expansion(const Character& chi) {
    const BreakSequence bs = break_sequence(chi);
    if (bs.b0 != 2) {
        throw std::domain_error("standard_expansion: character is not of type <2,m>");
    }
    const u32 p = chi.p();
    StandardExpansion se;
    se.p = p;
    se.m = bs.b1;
    se.x1 = chi.coeff(1) % p;
    se.x2 = chi.coeff(2) % p;
    for (const auto& [j, v] : chi.coeffs()) {
        const u32 aj = v / p; // for j >= 3 the value is an exact multiple of p
        if (aj != 0) se.a[j] = aj;
    }
    return se;
}

Indicator indicator(const Character& chi) {
    const StandardExpansion se = standard_expansion(chi);
    const u32 p = se.p;
    const u32 m = se.m;
    Indicator ind;
    if (m % p == 0) { // m = 2p
        ind.kind = Indicator::Case::m0;
        const u32 num = pow_mod(se.a_at(m - 1), p, p);
        const u32 den = mul_mod((m - 1) % p, pow_mod(se.x2, p, p), p);
        ind.values = {se.x2, sub_mod(div_mod(se.x1, se.x2, p), div_mod(num, den, p), p)};
    } else if (m % p == 1) {
        ind.kind = Indicator::Case::m1;
        ind.values = {se.x2, se.a_at(m)};
    } else {
        ind.kind = Indicator::Case::mid;
        const u32 am = se.a_at(m);
        const u32 den = mul_mod((m - 1) % p, am, p);
        ind.values = {se.x2, am,
                      sub_mod(div_mod(se.x1, se.x2, p), div_mod(se.a_at(m - 1), den, p), p)};
    }
    return ind;
}

Indicator indicator_1m(const Character& chi) {
    const BreakSequence bs = break_sequence(chi);
    if (bs.b0 != 1) {
        throw std::domain_error("indicator_1m: character is not of type <1,m>");
    }
    const u32 p = chi.p();
    const u32 m = bs.b1;
    const u32 a0 = chi.coeff(1) % p;
    auto a_at = [&](u32 j) { return chi.coeff(j) / p; };

    Indicator ind;
    if (m == p) {
        ind.kind = Indicator::Case::m0;
        ind.values = {a0, div_mod(a_at(p - 1), pow_mod(a0, p - 1, p), p)};
    } else if (m % p == 1) {
        ind.kind = Indicator::Case::m1;
        ind.values = {a0, a_at(m), 0};
    } else {
        ind.kind = Indicator::Case::mid;
        ind.values = {a0, a_at(m), div_mod(mul_mod(a0, a_at(m - 1), p), a_at(m), p)};
    }
    return ind;
}

namespace {

// Value sets for each support index of a type-<b0, m> family.
std::vector<u32> coefficient_choices(u32 p, u32 b0, u32 m, u32 j) {
    const u32 p2 = p * p;
    std::vector<u32> vals;
    if (j < b0) {
        for (u32 v = 0; v < p2; ++v) vals.push_back(v);
    } else if (j == b0) {
        for (u32 v = 1; v < p2; ++v) {
            if (v % p != 0) vals.push_back(v);
        }
    } else {
        const bool must_be_nonzero = (j == m);
        for (u32 a = must_be_nonzero ? 1 : 0; a < p; ++a) vals.push_back(a * p);
    }
    return vals;
}

} // namespace

u64 character_count(u32 p, u32 b0, u32 m) {
    u64 count = 1;
    for (u32 j : character_support(p, m)) {
        if (j < b0) count *= static_cast<u64>(p) * p;
        else if (j == b0) count *= static_cast<u64>(p) * (p - 1);
        else if (j == m) count *= p - 1;
        else count *= p;
    }
    return count;
}

void for_each_character_profile(u32 p, u32 b0, u32 m,
                                const std::function<void(const std::vector<u32>&)>& fn) {
    if (b0 != 1 && b0 != 2) {
        throw std::invalid_argument("character family: only types <1,m> and <2,m> are supported");
    }
    if (!validate_type(p, b0, m)) {
        throw std::invalid_argument("character family: invalid type <" + std::to_string(b0) + "," +
                                    std::to_string(m) + ">: " + type_violation(p, b0, m));
    }
    const std::vector<u32> support = character_support(p, m);
    std::vector<std::vector<u32>> choices;
    choices.reserve(support.size());
    for (u32 j : support) choices.push_back(coefficient_choices(p, b0, m, j));

    const u64 total = character_count(p, b0, m);
    std::vector<std::size_t> digit(support.size(), 0);
    std::vector<u32> prof(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) prof[i] = choices[i][0];
    for (u64 n = 0; n < total; ++n) {
        fn(prof);
        for (std::size_t i = 0; i < digit.size(); ++i) {
            if (++digit[i] < choices[i].size()) {
                prof[i] = choices[i][digit[i]];
                break;
            }
            digit[i] = 0;
            prof[i] = choices[i][0];
        }
    }
}

std::vector<Character> enumerate_characters(u32 p, u32 b0, u32 m) {
    const u64 total = character_count(p, b0, m);
    if (total > 300'000'000) {
        throw std::invalid_argument("enumerate_characters: family too large to materialize");
    }
    std::vector<Character> out;
    out.reserve(total);
    const BreakSequence want{b0, m};
    for_each_character_profile(p, b0, m, [&](const std::vector<u32>& prof) {
        Character chi = character_from_profile(p, m, prof);
        // Definitional filter; the constraint sets already force the type.
        if (break_sequence(chi) == want) out.push_back(std::move(chi));
    });
    return out;
}

std::vector<u32> profile(const Character& chi) {
    std::vector<u32> out;
    for (u32 j : character_support(chi.p(), chi.bound())) out.push_back(chi.coeff(j));
    return out;
}

Character character_from_profile(u32 p, u32 m, std::span<const u32> prof) {
    const std::vector<u32> support = character_support(p, m);
    if (prof.size() != support.size()) {
        throw std::invalid_argument("character_from_profile: wrong profile length");
    }
    std::map<u32, u32> coeffs;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (prof[i] != 0) coeffs[support[i]] = prof[i];
    }
    return Character(p, m, std::move(coeffs));
}

ActionTable::ActionTable(const NottinghamElement& u, u32 m)
    : p_(u.p()), p2_(u.p() * u.p()), support_(character_support(u.p(), m)) {
    if (u.precision() < static_cast<std::size_t>(m) + 1) {
        throw std::invalid_argument("ActionTable: element precision too small");
    }
    const FpSeries us = truncate(u.series(), m + 1);
    const FpSeries one = FpSeries::one(p_, m + 1);
    rows_.reserve(support_.size());
    FpSeries upow = one;
    for (u32 j = 1; j <= m; ++j) {
        upow = mul(upow, us);
        if (j % p_ == 0) continue;
        const UnitExponents e = decompose(add(one, upow), m);
        std::vector<u32> row;
        row.reserve(support_.size());
        for (u32 i : support_) row.push_back(e.at(i));
        rows_.push_back(std::move(row));
    }
}

std::vector<u32> ActionTable::apply(std::span<const u32> prof) const {
    std::vector<u32> out;
    apply_into(prof, out);
    return out;
}

void ActionTable::apply_into(std::span<const u32> prof, std::vector<u32>& out) const {
    if (prof.size() != support_.size()) {
        throw std::invalid_argument("ActionTable::apply: wrong profile length");
    }
    out.resize(support_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        u64 acc = 0;
        const auto& row = rows_[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            acc += static_cast<u64>(row[c]) * prof[c];
        }
        out[r] = static_cast<u32>(acc % p2_);
    }
}

} // namespace nott
