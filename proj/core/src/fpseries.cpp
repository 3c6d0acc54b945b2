#include <nott/fpseries.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nott {

namespace {

void check_same_p(const FpSeries& a, const FpSeries& b, const char* op) {
    if (a.p() != b.p()) {
        throw std::invalid_argument(std::string(op) + ": modulus mismatch (" +
                                    std::to_string(a.p()) + " vs " + std::to_string(b.p()) + ")");
    }
}

} // namespace

FpSeries::FpSeries(u32 p, std::size_t precision) : p_(p), c_(precision, 0) {
    if (!is_prime(p)) throw std::invalid_argument("FpSeries: p must be prime");
    if (precision == 0) throw std::invalid_argument("FpSeries: precision must be positive");
}

FpSeries::FpSeries(u32 p, std::vector<u32> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p)) throw std::invalid_argument("FpSeries: p must be prime");
    if (c_.empty()) throw std::invalid_argument("FpSeries: precision must be positive");
    for (auto& c : c_) c %= p_;
}

FpSeries FpSeries::constant(u32 p, u32 c, std::size_t precision) {
    FpSeries z(p, precision);
    z.c_[0] = c % p;
    return z;
}

FpSeries FpSeries::one(u32 p, std::size_t precision) {
    return constant(p, 1, precision);
}

FpSeries FpSeries::monomial(u32 p, u32 c, std::size_t degree, std::size_t precision) {
    FpSeries z(p, precision);
    if (degree >= precision) throw std::out_of_range("FpSeries::monomial: degree >= precision");
    z.c_[degree] = c % p;
    return z;
}

u32 FpSeries::operator[](std::size_t i) const {
    if (i >= c_.size()) throw std::out_of_range("FpSeries: coefficient index beyond precision");
    return c_[i];
}

bool FpSeries::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](u32 c) { return c == 0; });
}

FpSeries add(const FpSeries& a, const FpSeries& b) {
    check_same_p(a, b, "add");
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<u32> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = add_mod(a[i], b[i], a.p());
    return FpSeries(a.p(), std::move(out));
}

FpSeries sub(const FpSeries& a, const FpSeries& b) {
    check_same_p(a, b, "sub");
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<u32> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = sub_mod(a[i], b[i], a.p());
    return FpSeries(a.p(), std::move(out));
}

FpSeries mul(const FpSeries& a, const FpSeries& b) {
    check_same_p(a, b, "mul");
    const std::size_t n = std::min(a.precision(), b.precision());
    const u32 p = a.p();
    std::vector<u32> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const u32 ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = add_mod(out[i + j], mul_mod(ai, b[j], p), p);
        }
    }
    return FpSeries(p, std::move(out));
}

FpSeries compose(const FpSeries& f, const FpSeries& g) {
    check_same_p(f, g, "compose");
    if (g[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
    const std::size_t n = std::min(f.precision(), g.precision());
    const FpSeries gn = truncate(g, n);
    // Horner: coefficients of f beyond t^{n-1} cannot reach degrees < n
    // because g has positive valuation.
    FpSeries acc(f.p(), n);
    for (std::size_t i = n; i-- > 0;) {
        acc = mul(acc, gn);
        if (f[i] != 0) acc = add(acc, FpSeries::constant(f.p(), f[i], n));
    }
    return acc;
}

FpSeries reciprocal(const FpSeries& z) {
    if (z[0] == 0) throw std::domain_error("reciprocal: constant term is zero");
    const std::size_t n = z.precision();
    const u32 p = z.p();
    const u32 inv0 = inv_mod(z[0], p);
    std::vector<u32> w(n, 0);
    w[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        // coefficient of t^k in z*w must vanish: z0*wk + sum_{i>=1} zi*w_{k-i} = 0
        u32 s = 0;
        for (std::size_t i = 1; i <= k; ++i) s = add_mod(s, mul_mod(z[i], w[k - i], p), p);
        w[k] = mul_mod(neg_mod(s, p), inv0, p);
    }
    return FpSeries(p, std::move(w));
}

FpSeries pow_unit(const FpSeries& z, u64 e) {
    if (z[0] != 1) throw std::domain_error("pow_unit: constant term must be 1");
    FpSeries acc = FpSeries::one(z.p(), z.precision());
    FpSeries base = z;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

FpSeries truncate(const FpSeries& z, std::size_t precision) {
    if (precision > z.precision()) {
        throw std::invalid_argument("truncate: cannot extend precision");
    }
    return FpSeries(z.p(), std::vector<u32>(z.coeffs().begin(), z.coeffs().begin() + precision));
}

std::ostream& operator<<(std::ostream& os, const FpSeries& z) {
    bool first = true;
    for (std::size_t i = 0; i < z.precision(); ++i) {
        if (z[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || z[i] != 1) os << z[i];
        if (i >= 1) {
            if (z[i] != 1) os << "*";
            os << "t";
            if (i >= 2) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << " + O(t^" << z.precision() << ")";
    return os;
}

} // namespace nott
