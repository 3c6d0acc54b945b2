#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace nott {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Residue helpers. Operands are canonical (0 <= a,b < m) unless noted.
inline u32 add_mod(u32 a, u32 b, u32 m) {
    u32 s = a + b;
    return s >= m ? s - m : s;
}

inline u32 sub_mod(u32 a, u32 b, u32 m) {
    return a >= b ? a - b : a + m - b;
}

inline u32 neg_mod(u32 a, u32 m) {
    return a == 0 ? 0 : m - a;
}

inline u32 mul_mod(u32 a, u32 b, u32 m) {
    return static_cast<u32>(static_cast<u64>(a) * b % m);
}

inline u32 pow_mod(u32 a, u64 e, u32 m) {
    u64 r = 1 % m;
    u64 x = a % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

// Inverse modulo a prime p (Fermat).
inline u32 inv_mod(u32 a, u32 p) {
    if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
    return pow_mod(a % p, p - 2, p);
}

inline u32 div_mod(u32 a, u32 b, u32 p) {
    return mul_mod(a % p, inv_mod(b, p), p);
}

// binomial(alpha, 2) for a residue alpha: alpha(alpha-1)/2 in F_p, p odd.
inline u32 choose2_mod(u32 alpha, u32 p) {
    alpha %= p;
    u32 t = mul_mod(alpha, sub_mod(alpha, 1 % p, p), p);
    return mul_mod(t, inv_mod(2, p), p);
}

// Split k = p^v * j with p coprime to j; returns {v, j}.
inline std::pair<u32, u32> split_p(u32 k, u32 p) {
    u32 v = 0;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return {v, k};
}

} // namespace nott
