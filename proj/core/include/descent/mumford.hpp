#pragma once

#include "descent/curve.hpp"
#include "descent/poly.hpp"

namespace descent {

/// Mumford representation (u, v) of a point of the Jacobian of an
/// odd-degree genus-2 model: u monic of degree <= 2, deg v < deg u and
/// u | v^2 - f. The identity is (1, 0).
template <class C>
struct MumfordT {
    Poly<C> u, v;

    bool is_identity() const { return u.deg() == 0; }
};

using MumfordQ = MumfordT<QQCtx>;
using MumfordFp = MumfordT<FpCtx>;

template <class C>
MumfordT<C> mumford_identity(const C& K) {
    return {poly_const(K, K.one()), poly_zero(K)};
}

template <class C>
bool mumford_eq(const MumfordT<C>& a, const MumfordT<C>& b) {
    return a.u == b.u && a.v == b.v;
}

/// Checks the Mumford invariants against the curve polynomial f.
template <class C>
void validate_mumford(const Poly<C>& f, const MumfordT<C>& D) {
    if (D.u.is_zero() || !D.u.is_monic())
        throw InvalidMumford("u must be monic");
    if (D.u.deg() > 2) throw InvalidMumford("deg u must be at most 2");
    if (!D.v.is_zero() && D.v.deg() >= D.u.deg())
        throw InvalidMumford("deg v must be below deg u");
    auto r = poly_mod(poly_sub(poly_mul(D.v, D.v), f), D.u);
    if (!r.is_zero()) throw InvalidMumford("u does not divide v^2 - f");
}

template <class C>
MumfordT<C> mumford_neg(const MumfordT<C>& D) {
    MumfordT<C> r = D;
    r.v = D.u.is_zero() ? D.v : poly_mod(poly_neg(D.v), D.u);
    return r;
}

/// Cantor composition and reduction on an odd-degree (quintic) genus-2
/// model; f need not be monic. Throws EvenModelUnsupported for any other
/// model degree.
template <class C>
MumfordT<C> cantor_add(const Poly<C>& f, const MumfordT<C>& D1,
                       const MumfordT<C>& D2) {
    if (f.deg() != 5)
        throw EvenModelUnsupported(
            "divisor arithmetic is implemented for quintic models only");
    const C& K = f.K;

    // Composition (Cantor): d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1+v2).
    auto [d1, e1, e2] = poly_xgcd(D1.u, D2.u);
    Poly<C> vsum = poly_add(D1.v, D2.v);
    auto [d, c1, c2] = poly_xgcd(d1, vsum);
    // s1 = c1 e1, s2 = c1 e2, s3 = c2.
    Poly<C> u = poly_mul(D1.u, D2.u);
    {
        Poly<C> dd = poly_mul(d, d);
        u = poly_divrem(u, dd).first;
    }
    // v = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + f)) / d mod u
    Poly<C> t1 = poly_mul(poly_mul(c1, e1), poly_mul(D1.u, D2.v));
    Poly<C> t2 = poly_mul(poly_mul(c1, e2), poly_mul(D2.u, D1.v));
    Poly<C> t3 = poly_mul(c2, poly_add(poly_mul(D1.v, D2.v), f));
    Poly<C> num = poly_add(poly_add(t1, t2), t3);
    Poly<C> v = poly_divrem(num, d).first;
    v = poly_mod(v, u);

    // Reduction to deg u <= 2.
    while (u.deg() > 2) {
        Poly<C> unew = poly_divrem(poly_sub(f, poly_mul(v, v)), u).first;
        unew = poly_monic(unew);
        Poly<C> vnew = poly_mod(poly_neg(v), unew);
        u = unew;
        v = vnew;
    }
    u = poly_monic(u);
    v = poly_mod(v, u);
    return {u, v};
}

/// n D by double-and-add.
template <class C>
MumfordT<C> cantor_mul(const Poly<C>& f, BigInt n, MumfordT<C> D) {
    if (n < 0) {
        n = -n;
        D = mumford_neg(D);
    }
    MumfordT<C> acc = mumford_identity<C>(f.K);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = cantor_add(f, acc, D);
        D = cantor_add(f, D, D);
        n >>= 1;
    }
    return acc;
}

/// Canonical order by (deg u, u coefficients, v coefficients), lowest
/// coefficients first; the order used by Jacobian enumeration.
bool mumford_less(const MumfordFp& a, const MumfordFp& b);

struct MumfordLess {
    bool operator()(const MumfordFp& a, const MumfordFp& b) const {
        return mumford_less(a, b);
    }
};

/// The embedding P -> [P - infinity] for odd-degree models: an affine
/// point gives (x - x0, y0), the infinity point gives the identity.
MumfordQ abel_jacobi(const HyperellipticCurve& c, const RationalPoint& pt);
MumfordFp abel_jacobi_fp(const HyperellipticCurve& c, uint32_t p,
                         const CurvePointFp& pt);

/// Coefficientwise reduction of a divisor at an odd good prime; throws
/// BadReductionDenominator when p divides a denominator. A group
/// homomorphism J(Q) -> J(F_p) at good p.
MumfordFp mumford_reduce(const HyperellipticCurve& c, const MumfordQ& D,
                         uint32_t p);

} // namespace descent
