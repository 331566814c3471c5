#pragma once

#include <cstdint>

#include "descent/curve.hpp"
#include "descent/poly.hpp"

namespace descent {

/// Elliptic curve y^2 = x^3 + a2 x^2 + a4 x + a6 over the field of the
/// context C (the rationals or a prime field of characteristic > 3).
template <class C>
struct EcCurveT {
    C K;
    typename C::Elem a2, a4, a6;
};

template <class C>
struct EcPointT {
    bool infinity = true;
    typename C::Elem x{}, y{};
};

using EcCurveQ = EcCurveT<QQCtx>;
using EcPointQ = EcPointT<QQCtx>;
using EcCurveFp = EcCurveT<FpCtx>;
using EcPointFp = EcPointT<FpCtx>;

template <class C>
EcPointT<C> ec_identity(const EcCurveT<C>&) {
    return {};
}

template <class C>
bool ec_on_curve(const EcCurveT<C>& e, const EcPointT<C>& pt) {
    if (pt.infinity) return true;
    const C& K = e.K;
    auto rhs = K.add(K.mul(K.add(K.mul(K.add(pt.x, e.a2), pt.x), e.a4), pt.x),
                     e.a6);
    return K.eq(K.mul(pt.y, pt.y), rhs);
}

template <class C>
bool ec_eq(const EcCurveT<C>& e, const EcPointT<C>& a, const EcPointT<C>& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return e.K.eq(a.x, b.x) && e.K.eq(a.y, b.y);
}

template <class C>
EcPointT<C> ec_neg(const EcCurveT<C>& e, const EcPointT<C>& a) {
    if (a.infinity) return a;
    return {false, a.x, e.K.neg(a.y)};
}

/// Chord-and-tangent addition.
template <class C>
EcPointT<C> ec_add(const EcCurveT<C>& e, const EcPointT<C>& a,
                   const EcPointT<C>& b) {
    const C& K = e.K;
    if (a.infinity) return b;
    if (b.infinity) return a;
    if (K.eq(a.x, b.x)) {
        if (K.eq(a.y, K.neg(b.y))) return {};
        // doubling; y != 0 here because y = -y was handled above
        auto three = K.from_int(3), two = K.from_int(2);
        auto num = K.add(K.add(K.mul(three, K.mul(a.x, a.x)),
                               K.mul(two, K.mul(e.a2, a.x))),
                         e.a4);
        auto lambda = K.div(num, K.mul(two, a.y));
        auto x3 = K.sub(K.sub(K.sub(K.mul(lambda, lambda), e.a2), a.x), b.x);
        auto y3 = K.sub(K.mul(lambda, K.sub(a.x, x3)), a.y);
        return {false, x3, y3};
    }
    auto lambda = K.div(K.sub(b.y, a.y), K.sub(b.x, a.x));
    auto x3 = K.sub(K.sub(K.sub(K.mul(lambda, lambda), e.a2), a.x), b.x);
    auto y3 = K.sub(K.mul(lambda, K.sub(a.x, x3)), a.y);
    return {false, x3, y3};
}

template <class C>
EcPointT<C> ec_sub(const EcCurveT<C>& e, const EcPointT<C>& a,
                   const EcPointT<C>& b) {
    return ec_add(e, a, ec_neg(e, b));
}

/// n P by double-and-add; n may be negative.
template <class C>
EcPointT<C> ec_mul(const EcCurveT<C>& e, BigInt n, EcPointT<C> P) {
    if (n < 0) {
        n = -n;
        P = ec_neg(e, P);
    }
    EcPointT<C> acc = ec_identity(e);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = ec_add(e, acc, P);
        P = ec_add(e, P, P);
        n >>= 1;
    }
    return acc;
}

/// The integral Weierstrass view of a degree-3 model y^2 = g(x): with
/// G = d^2 g integral and l = lc(G), the substitution (x, y) ->
/// (l x, l d y) gives eta^2 = xi^3 + G2 xi^2 + G1 l xi + G0 l^2. Throws
/// DegreeOutOfRange for other degrees.
EcCurveQ ec_from_cubic(const HyperellipticCurve& c);

/// The point map matching ec_from_cubic; infinity goes to the identity.
EcPointQ ec_lift_point(const HyperellipticCurve& c, const RationalPoint& pt);

/// Reduction of the curve at an odd good prime.
EcCurveFp ec_reduce_curve(const EcCurveQ& e, uint32_t p);

/// Reduction of a point: coordinatewise when denominators are prime to p,
/// the identity when p divides the denominator of x (projective
/// normalization); throws BadReductionDenominator only in the impossible
/// middle case (x p-integral, y not), which signals an off-curve input.
EcPointFp ec_reduce_point(const EcPointQ& pt, uint32_t p);

} // namespace descent
