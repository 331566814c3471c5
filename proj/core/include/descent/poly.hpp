#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "descent/errors.hpp"
#include "descent/fp.hpp"
#include "descent/rat.hpp"

namespace descent {

/// Field context over F_p for the generic polynomial template.
struct FpCtx {
    using Elem = uint32_t;
    Fp F;

    explicit FpCtx(uint32_t p) : F(p) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return F.add(a, b); }
    Elem sub(Elem a, Elem b) const { return F.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return F.mul(a, b); }
    Elem div(Elem a, Elem b) const { return F.div(a, b); }
    Elem neg(Elem a) const { return F.neg(a); }
    Elem from_int(uint64_t n) const { return static_cast<Elem>(n % F.modulus()); }
    bool same(const FpCtx& o) const { return F.modulus() == o.F.modulus(); }
};

/// Field context over the rationals.
struct QQCtx {
    using Elem = BigRat;

    Elem zero() const { return BigRat(0); }
    Elem one() const { return BigRat(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem from_int(uint64_t n) const { return BigRat(static_cast<unsigned long>(n)); }
    bool same(const QQCtx&) const { return true; }
};

/// Dense univariate polynomial over a field context K; coefficients are
/// stored lowest degree first with no trailing zeros (the zero polynomial
/// has an empty coefficient vector).
template <class C>
struct Poly {
    C K;
    std::vector<typename C::Elem> c;

    explicit Poly(C ctx) : K(std::move(ctx)) {}
    Poly(C ctx, std::vector<typename C::Elem> coeffs)
        : K(std::move(ctx)), c(std::move(coeffs)) {
        trim();
    }

    void trim() {
        while (!c.empty() && K.is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    typename C::Elem lc() const { return c.back(); }
    typename C::Elem coeff(std::size_t i) const {
        return i < c.size() ? c[i] : K.zero();
    }
    bool is_monic() const { return !c.empty() && K.eq(c.back(), K.one()); }

    typename C::Elem eval(const typename C::Elem& x) const {
        typename C::Elem r = K.zero();
        for (std::size_t i = c.size(); i-- > 0;) r = K.add(K.mul(r, x), c[i]);
        return r;
    }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!K.eq(c[i], o.c[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

using FpPoly = Poly<FpCtx>;
using RatPoly = Poly<QQCtx>;

template <class C>
Poly<C> poly_zero(const C& K) {
    return Poly<C>(K);
}

template <class C>
Poly<C> poly_const(const C& K, typename C::Elem a) {
    Poly<C> r(K);
    r.c.push_back(std::move(a));
    r.trim();
    return r;
}

/// x - a as a monic linear polynomial.
template <class C>
Poly<C> poly_linear(const C& K, const typename C::Elem& root) {
    Poly<C> r(K);
    r.c = {K.neg(root), K.one()};
    return r;
}

template <class C>
Poly<C> poly_add(const Poly<C>& a, const Poly<C>& b) {
    Poly<C> r(a.K);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.K.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = a.K.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

template <class C>
Poly<C> poly_sub(const Poly<C>& a, const Poly<C>& b) {
    Poly<C> r(a.K);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.K.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = a.K.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

template <class C>
Poly<C> poly_neg(const Poly<C>& a) {
    Poly<C> r = a;
    for (auto& x : r.c) x = a.K.neg(x);
    return r;
}

template <class C>
Poly<C> poly_mul(const Poly<C>& a, const Poly<C>& b) {
    Poly<C> r(a.K);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = a.K.add(r.c[i + j], a.K.mul(a.c[i], b.c[j]));
    r.trim();
    return r;
}

template <class C>
Poly<C> poly_scale(const Poly<C>& a, const typename C::Elem& s) {
    Poly<C> r = a;
    for (auto& x : r.c) x = a.K.mul(x, s);
    r.trim();
    return r;
}

/// Quotient and remainder with deg r < deg b; throws on zero divisor.
template <class C>
std::pair<Poly<C>, Poly<C>> poly_divrem(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const C& K = a.K;
    Poly<C> q(K), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.c.size() - b.c.size() + 1, K.zero());
    auto binv = K.div(K.one(), b.lc());
    for (int i = r.deg(); i >= b.deg(); --i) {
        if (K.is_zero(r.coeff(i))) continue;
        auto f = K.mul(r.c[i], binv);
        q.c[i - b.deg()] = f;
        for (int j = 0; j <= b.deg(); ++j) {
            std::size_t k = i - b.deg() + j;
            r.c[k] = K.sub(r.c[k], K.mul(f, b.c[j]));
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

template <class C>
Poly<C> poly_mod(const Poly<C>& a, const Poly<C>& b) {
    return poly_divrem(a, b).second;
}

template <class C>
Poly<C> poly_monic(const Poly<C>& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.K.div(a.K.one(), a.lc()));
}

/// Monic gcd; gcd(0, 0) is rejected.
template <class C>
Poly<C> poly_gcd(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() && b.is_zero()) throw BothZeroPoly("gcd(0, 0)");
    Poly<C> x = a, y = b;
    while (!y.is_zero()) {
        Poly<C> r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return poly_monic(x);
}

/// Extended gcd: returns (g, s, t) with s a + t b = g and g monic.
template <class C>
std::tuple<Poly<C>, Poly<C>, Poly<C>> poly_xgcd(const Poly<C>& a,
                                                const Poly<C>& b) {
    if (a.is_zero() && b.is_zero()) throw BothZeroPoly("xgcd(0, 0)");
    const C& K = a.K;
    Poly<C> r0 = a, r1 = b;
    Poly<C> s0 = poly_const(K, K.one()), s1 = poly_zero(K);
    Poly<C> t0 = poly_zero(K), t1 = poly_const(K, K.one());
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = r1;
        r1 = r;
        Poly<C> s = poly_sub(s0, poly_mul(q, s1));
        s0 = s1;
        s1 = s;
        Poly<C> t = poly_sub(t0, poly_mul(q, t1));
        t0 = t1;
        t1 = t;
    }
    auto inv = K.div(K.one(), r0.lc());
    return {poly_scale(r0, inv), poly_scale(s0, inv), poly_scale(t0, inv)};
}

template <class C>
Poly<C> poly_derivative(const Poly<C>& a) {
    Poly<C> r(a.K);
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = a.K.mul(a.c[i], a.K.from_int(i));
    r.trim();
    return r;
}

/// Coefficient reversal padded to degree n: x^n a(1/x).
template <class C>
Poly<C> poly_reverse_padded(const Poly<C>& a, std::size_t n) {
    Poly<C> r(a.K);
    r.c.assign(n + 1, a.K.zero());
    for (std::size_t i = 0; i < a.c.size() && i <= n; ++i) r.c[n - i] = a.c[i];
    r.trim();
    return r;
}

/// Resultant of two integer polynomials (lowest degree first) via
/// fraction-free elimination of the Sylvester matrix.
BigInt resultant_int(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

/// Reduce an integer polynomial mod p.
FpPoly poly_reduce(const std::vector<BigInt>& a, uint32_t p);

/// Reduce a rational polynomial mod p; throws BadReductionDenominator when
/// p divides any coefficient denominator.
FpPoly poly_reduce(const std::vector<BigRat>& a, uint32_t p);

} // namespace descent
