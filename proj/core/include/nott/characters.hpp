#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nott/nottingham.hpp>
#include <nott/units.hpp>

namespace nott {

/// Continuous character of the principal unit group with values in Z/p^2,
/// stored as its values on the basis units E_j = 1 + t^j for p coprime to j,
/// 1 <= j <= bound. Zero values are omitted; p must be an odd prime.
class Character {
public:
    Character(u32 p, u32 bound, std::map<u32, u32> coeffs);

    u32 p() const noexcept { return p_; }
    u32 bound() const noexcept { return bound_; }

    // chi(E_j); zero when no value is stored at j.
    u32 coeff(u32 j) const {
        auto it = coeffs_.find(j);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<u32, u32>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Character& a, const Character& b) = default;

private:
    u32 p_;
    u32 bound_;
    std::map<u32, u32> coeffs_;
};

/// Break sequence <b0, b1> of a surjective character into Z/p^2.
struct BreakSequence {
    u32 b0 = 0;
    u32 b1 = 0;

    friend bool operator==(const BreakSequence& a, const BreakSequence& b) = default;
};

/// Coordinates of a type-<2,m> character: chi = x1 Z_1 + x2 Z_2 + sum a_j p Z_j
/// with x1, x2, a_j in F_p and x2 nonzero.
struct StandardExpansion {
    u32 p = 0;
    u32 m = 0;
    u32 x1 = 0;
    u32 x2 = 0;
    std::map<u32, u32> a; // j -> a_j in F_p, zeros omitted

    u32 a_at(u32 j) const {
        auto it = a.find(j);
        return it == a.end() ? 0 : it->second;
    }
};

/// Complete invariant for weak equivalence; the shape depends on m mod p.
struct Indicator {
    enum class Case { m0, mid, m1 };

    Case kind = Case::mid;
    std::vector<u32> values;

    friend bool operator==(const Indicator& a, const Indicator& b) = default;
    friend auto operator<=>(const Indicator& a, const Indicator& b) = default;
};

std::string to_string(Indicator::Case c);

// Indices j <= m with p coprime to j, ascending.
std::vector<u32> character_support(u32 p, u32 m);

// chi(z) = sum_j c_j chi(E_j) mod p^2 where {c_j} = decompose(z, bound).
// Requires z to be a principal unit at precision >= bound+1.
u32 evaluate(const Character& chi, const FpSeries& z);

// The transported character (E_j -> chi(E_j o u)); requires precision of u
// at least bound+1. Composite elements satisfy
//   act(compose(u, v), chi) == act(u, act(v, chi)).
Character act(const NottinghamElement& u, const Character& chi);

// b0 = largest index with invertible value; b1 = largest b such that some
// unit of valuation b has value exactly p, i.e.
// max(p*b0, largest index with nonzero value). Throws for non-surjective
// characters (no invertible value).
BreakSequence break_sequence(const Character& chi);

// The three admissibility conditions for <b0, b1>: p coprime to b0,
// b1 >= p*b0, and strict inequality forces p coprime to b1.
bool validate_type(u32 p, u32 b0, u32 b1);

// Human-readable description of the first violated condition; empty when
// the type is valid.
std::string type_violation(u32 p, u32 b0, u32 b1);

// Requires break_sequence(chi).b0 == 2.
StandardExpansion standard_expansion(const Character& chi);

// Indicator of a type-<2,m> character:
//   m = 0 mod p: [x2, x1/x2 - a_{m-1}^p / ((m-1) x2^p)]
//   m != 0,1   : [x2, a_m, x1/x2 - a_{m-1} / ((m-1) a_m)]
//   m = 1 mod p: [x2, a_m]
Indicator indicator(const Character& chi);

// Indicator of a type-<1,m> character (prime field, so the trace is the
// identity):
//   m = p      : [a0, a_{p-1} / a0^{p-1}]
//   m = 1 mod p: [a0, a_m, 0]
//   otherwise  : [a0, a_m, a0 a_{m-1} / a_m]
Indicator indicator_1m(const Character& chi);

// Number of characters of type <b0, m> (b0 in {1, 2}) without enumerating.
u64 character_count(u32 p, u32 b0, u32 m);

// All characters of type <b0, m>, b0 in {1, 2}: the coefficient at b0 is
// invertible, lower indices are free mod p^2, higher indices carry multiples
// of p, and the coefficient at m is nonzero when p does not divide m.
// Deterministic order (first support index varies fastest).
std::vector<Character> enumerate_characters(u32 p, u32 b0, u32 m);

// Dense value vector of chi over character_support(p, bound).
std::vector<u32> profile(const Character& chi);
Character character_from_profile(u32 p, u32 m, std::span<const u32> prof);

// Streams the dense value vectors of the type-<b0,m> family in enumeration
// order without materializing Character objects; the callback receives a
// buffer that is reused between calls.
void for_each_character_profile(u32 p, u32 b0, u32 m,
                                const std::function<void(const std::vector<u32>&)>& fn);

/// The action of a fixed element u on characters of bound m, in matrix form:
/// row r holds the basis decomposition of E_{support[r]} o u, so applying the
/// table to a value vector gives the value vector of act(u, chi). One table
/// costs a handful of series operations and then each application is a small
/// mod-p^2 matrix-vector product.
class ActionTable {
public:
    ActionTable(const NottinghamElement& u, u32 m);

    const std::vector<u32>& support() const noexcept { return support_; }

    std::vector<u32> apply(std::span<const u32> prof) const;
    void apply_into(std::span<const u32> prof, std::vector<u32>& out) const;

private:
    u32 p_;
    u32 p2_;
    std::vector<u32> support_;
    std::vector<std::vector<u32>> rows_;
};

} // namespace nott
