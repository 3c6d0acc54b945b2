#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nott/fpseries.hpp>

namespace nott {

/// Element of the Nottingham group at finite precision: a series of the form
/// t(1 + a1 t + a2 t^2 + ...), i.e. constant term 0 and degree-1 coefficient 1.
/// The group operation is composition of power series.
class NottinghamElement {
public:
    explicit NottinghamElement(FpSeries s);

    static NottinghamElement identity(u32 p, std::size_t precision);

    // t(1 + tail[0] t + tail[1] t^2 + ...); the tail is zero-padded up to
    // the requested precision.
    static NottinghamElement from_tail(u32 p, const std::vector<u32>& tail, std::size_t precision);

    const FpSeries& series() const noexcept { return s_; }
    u32 p() const noexcept { return s_.p(); }
    std::size_t precision() const noexcept { return s_.precision(); }

    // a_i in u = t(1 + a1 t + a2 t^2 + ...), i.e. the coefficient of t^{i+1}.
    u32 alpha(std::size_t i) const { return s_[i + 1]; }

    // u(t)/t, a principal unit at precision N-1.
    FpSeries unit_part() const;

    friend bool operator==(const NottinghamElement& a, const NottinghamElement& b) = default;

private:
    FpSeries s_;
};

// u(v(t)), truncated to the minimum precision.
NottinghamElement compose(const NottinghamElement& u, const NottinghamElement& v);

// Compositional inverse: v with u(v(t)) = v(u(t)) = t mod t^N.
NottinghamElement inverse(const NottinghamElement& u);

NottinghamElement truncate(const NottinghamElement& u, std::size_t precision);

// Largest d with u(t) = t mod t^{d+1}; nullopt when u is the identity at
// full precision.
std::optional<std::size_t> depth(const NottinghamElement& u);

// Smallest k >= 1 with the k-fold composite of u congruent to t mod t^N.
// Requires N <= precision of u.
std::size_t order_in_quotient(const NottinghamElement& u, std::size_t N);

/// Image of an element under the first-two-coefficients map: the pair
/// (a, b) from u = t(1 + a t + b t^2 + ...), an element of (F_p x F_p, oplus).
struct PhiImage {
    u32 p;
    u32 a;
    u32 b;

    friend bool operator==(const PhiImage& x, const PhiImage& y) = default;
};

// Requires precision >= 4 (the coefficient of t^3 must be visible).
PhiImage phi(const NottinghamElement& u);

// Group law (a,b) + (c,d) = (a+c, b+d+2ac) on F_p x F_p; phi becomes a
// homomorphism for it.
PhiImage oplus(const PhiImage& x, const PhiImage& y);

// Inverse for oplus: (-a, -b + 2a^2).
PhiImage oplus_inverse(const PhiImage& x);

// Membership in the subset N(x1,x2) cut out by
//   (x1/x2) a - binom(a,2) + b = 0 (mod p)
// on the first two coefficients (a, b) of u. Requires x2 != 0 and
// precision >= 4.
bool in_coset_set(const NottinghamElement& u, u32 x1, u32 x2);

// The unique k in {0,...,p-1} with u in N(x1,x2) * g(k), where
// g(k) = t(1 + k t^2); equals (x1/x2) a - binom(a,2) + b in F_p.
u32 coset_index(const NottinghamElement& u, u32 x1, u32 x2);

// g(k) = t(1 + k t^2).
NottinghamElement g_element(u32 p, u32 k, std::size_t precision);

// All p^{N-2} representatives t(1 + a1 t + ... + a_{N-2} t^{N-2}) of the
// quotient by the depth->(N-1) filtration subgroup, at precision N, ordered
// lexicographically with a1 varying fastest.
std::vector<NottinghamElement> enumerate_quotient(u32 p, std::size_t N);

} // namespace nott
