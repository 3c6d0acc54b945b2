#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include <nott/modarith.hpp>

namespace nott {

/// Truncated formal power series over F_p with explicit precision: the
/// coefficients of t^0 .. t^{N-1} are stored, the series is known mod t^N.
/// Values are immutable after construction; all operations are pure and
/// truncate to the minimum precision of their operands.
class FpSeries {
public:
    // Zero series at the given precision.
    FpSeries(u32 p, std::size_t precision);

    // Series with the given coefficients; precision = coeffs.size().
    // Coefficients are reduced to canonical residues {0,...,p-1}.
    FpSeries(u32 p, std::vector<u32> coeffs);

    static FpSeries constant(u32 p, u32 c, std::size_t precision);
    static FpSeries one(u32 p, std::size_t precision);
    static FpSeries monomial(u32 p, u32 c, std::size_t degree, std::size_t precision);

    u32 p() const noexcept { return p_; }
    std::size_t precision() const noexcept { return c_.size(); }
    const std::vector<u32>& coeffs() const noexcept { return c_; }

    // Coefficient of t^i; throws std::out_of_range for i >= precision.
    u32 operator[](std::size_t i) const;

    bool is_zero() const noexcept;

    friend bool operator==(const FpSeries& a, const FpSeries& b) = default;

private:
    u32 p_;
    std::vector<u32> c_;
};

// Coefficientwise sum/difference at the minimum of the two precisions.
FpSeries add(const FpSeries& a, const FpSeries& b);
FpSeries sub(const FpSeries& a, const FpSeries& b);

// Cauchy product truncated to the minimum precision.
FpSeries mul(const FpSeries& a, const FpSeries& b);

// f(g(t)) by Horner evaluation in the truncated ring; g must have zero
// constant term.
FpSeries compose(const FpSeries& f, const FpSeries& g);

// Multiplicative inverse of a series with invertible constant term.
FpSeries reciprocal(const FpSeries& z);

// z^e by square-and-multiply; z must have constant term 1, e >= 0.
// Negative exponents go through reciprocal first.
FpSeries pow_unit(const FpSeries& z, u64 e);

// Restriction to a smaller precision (precision must not exceed z's).
FpSeries truncate(const FpSeries& z, std::size_t precision);

inline FpSeries operator+(const FpSeries& a, const FpSeries& b) { return add(a, b); }
inline FpSeries operator-(const FpSeries& a, const FpSeries& b) { return sub(a, b); }
inline FpSeries operator*(const FpSeries& a, const FpSeries& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const FpSeries& z);

} // namespace nott
