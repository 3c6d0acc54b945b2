#include <nott/nottingham.hpp>

#include <stdexcept>

namespace nott {

NottinghamElement::NottinghamElement(FpSeries s) : s_(std::move(s)) {
    if (s_.precision() < 2) {
        throw std::invalid_argument("NottinghamElement: precision must be at least 2");
    }
    if (s_[0] != 0 || s_[1] != 1) {
        throw std::invalid_argument("NottinghamElement: series must be t(1 + ...)");
    }
}

NottinghamElement NottinghamElement::identity(u32 p, std::size_t precision) {
    return NottinghamElement(FpSeries::monomial(p, 1, 1, precision));
}

NottinghamElement NottinghamElement::from_tail(u32 p, const std::vector<u32>& tail,
                                               std::size_t precision) {
    if (precision < 2 || tail.size() > precision - 2) {
        throw std::invalid_argument("NottinghamElement::from_tail: tail does not fit precision");
    }
    std::vector<u32> c(precision, 0);
    c[1] = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) c[i + 2] = tail[i];
    return NottinghamElement(FpSeries(p, std::move(c)));
}

FpSeries NottinghamElement::unit_part() const {
    std::vector<u32> c(s_.coeffs().begin() + 1, s_.coeffs().end());
    return FpSeries(p(), std::move(c));
}

NottinghamElement compose(const NottinghamElement& u, const NottinghamElement& v) {
    return NottinghamElement(compose(u.series(), v.series()));
}

NottinghamElement inverse(const NottinghamElement& u) {
    const std::size_t n = u.precision();
    const u32 p = u.p();
    // Solve u(v(t)) = t degree by degree: if u(v) = t + c t^k + O(t^{k+1})
    // then correcting v by -c t^k cancels the t^k term, since u'(v) = 1 + O(t).
    std::vector<u32> v(n, 0);
    v[1] = 1;
    for (std::size_t k = 2; k < n; ++k) {
        const FpSeries w = compose(u.series(), FpSeries(p, v));
        if (w[k] != 0) v[k] = neg_mod(w[k], p);
    }
    return NottinghamElement(FpSeries(p, std::move(v)));
}

NottinghamElement truncate(const NottinghamElement& u, std::size_t precision) {
    return NottinghamElement(truncate(u.series(), precision));
}

std::optional<std::size_t> depth(const NottinghamElement& u) {
    for (std::size_t i = 2; i < u.precision(); ++i) {
        if (u.series()[i] != 0) return i - 1;
    }
    return std::nullopt;
}

std::size_t order_in_quotient(const NottinghamElement& u, std::size_t N) {
    if (N < 2 || N > u.precision()) {
        throw std::invalid_argument("order_in_quotient: N must be in [2, precision]");
    }
    const NottinghamElement base = truncate(u, N);
    const NottinghamElement id = NottinghamElement::identity(u.p(), N);
    NottinghamElement w = base;
    std::size_t k = 1;
    while (!(w == id)) {
        w = compose(w, base);
        ++k;
    }
    return k;
}

PhiImage phi(const NottinghamElement& u) {
    if (u.precision() < 4) {
        throw std::invalid_argument("phi: precision must be at least 4");
    }
    return PhiImage{u.p(), u.alpha(1), u.alpha(2)};
}

PhiImage oplus(const PhiImage& x, const PhiImage& y) {
    if (x.p != y.p) throw std::invalid_argument("oplus: modulus mismatch");
    const u32 p = x.p;
    const u32 cross = mul_mod(2 % p, mul_mod(x.a, y.a, p), p);
    return PhiImage{p, add_mod(x.a, y.a, p), add_mod(add_mod(x.b, y.b, p), cross, p)};
}

PhiImage oplus_inverse(const PhiImage& x) {
    const u32 p = x.p;
    const u32 sq = mul_mod(2 % p, mul_mod(x.a, x.a, p), p);
    return PhiImage{p, neg_mod(x.a, p), add_mod(neg_mod(x.b, p), sq, p)};
}

namespace {

u32 coset_value(const NottinghamElement& u, u32 x1, u32 x2) {
    const u32 p = u.p();
    if (x2 % p == 0) throw std::domain_error("coset condition: x2 must be nonzero");
    const PhiImage im = phi(u);
    u32 v = mul_mod(div_mod(x1, x2, p), im.a, p);
    v = sub_mod(v, choose2_mod(im.a, p), p);
    return add_mod(v, im.b, p);
}

} // namespace

bool in_coset_set(const NottinghamElement& u, u32 x1, u32 x2) {
    return coset_value(u, x1, x2) == 0;
}

u32 coset_index(const NottinghamElement& u, u32 x1, u32 x2) {
    return coset_value(u, x1, x2);
}

NottinghamElement g_element(u32 p, u32 k, std::size_t precision) {
    return NottinghamElement::from_tail(p, {0, k % p}, precision);
}

std::vector<NottinghamElement> enumerate_quotient(u32 p, std::size_t N) {
    if (N < 2) throw std::invalid_argument("enumerate_quotient: N must be at least 2");
    const std::size_t digits = N - 2;
    u64 count = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        count *= p;
        if (count > 100'000'000) {
            throw std::invalid_argument("enumerate_quotient: quotient too large to materialize");
        }
    }
    std::vector<NottinghamElement> out;
    out.reserve(count);
    std::vector<u32> tail(digits, 0);
    for (u64 n = 0; n < count; ++n) {
        out.push_back(NottinghamElement::from_tail(p, tail, N));
        // odometer with a1 fastest
        for (std::size_t i = 0; i < digits; ++i) {
            if (++tail[i] < p) break;
            tail[i] = 0;
        }
    }
    return out;
}

} // namespace nott
