#include "descent/mumford.hpp"

namespace descent {

namespace {

void require_quintic(const HyperellipticCurve& c) {
    if (c.degree() != 5)
        throw EvenModelUnsupported(
            "divisor arithmetic is implemented for quintic models only");
}

} // namespace

bool mumford_less(const MumfordFp& a, const MumfordFp& b) {
    if (a.u.deg() != b.u.deg()) return a.u.deg() < b.u.deg();
    for (int i = 0; i <= a.u.deg(); ++i)
        if (a.u.coeff(i) != b.u.coeff(i)) return a.u.coeff(i) < b.u.coeff(i);
    for (int i = 0; i < a.u.deg(); ++i)
        if (a.v.coeff(i) != b.v.coeff(i)) return a.v.coeff(i) < b.v.coeff(i);
    return false;
}

MumfordQ abel_jacobi(const HyperellipticCurve& c, const RationalPoint& pt) {
    require_quintic(c);
    validate_point(c, pt);
    QQCtx K;
    if (pt.kind != RationalPoint::Affine) return mumford_identity(K);
    return {poly_linear(K, pt.x), poly_const(K, pt.y)};
}

MumfordFp abel_jacobi_fp(const HyperellipticCurve& c, uint32_t p,
                         const CurvePointFp& pt) {
    require_quintic(c);
    FpCtx K(p);
    if (pt.kind == CurvePointFp::InfOdd) return mumford_identity(K);
    if (pt.kind != CurvePointFp::Affine)
        throw PointNotOnCurve("infinity branch point on an odd-degree model");
    return {poly_linear(K, pt.x), poly_const(K, pt.y)};
}

MumfordFp mumford_reduce(const HyperellipticCurve& c, const MumfordQ& D,
                         uint32_t p) {
    require_quintic(c);
    if (!is_good_prime(c, p))
        throw BadReductionPrime("p = " + std::to_string(p) +
                                " is not an odd good prime");
    FpCtx K(p);
    auto reduce_coeffs = [&](const std::vector<BigRat>& cs, const BigInt& s) {
        std::vector<uint32_t> out;
        out.reserve(cs.size());
        for (const auto& a : cs) {
            auto r = mod_p(BigRat(s) * a, p);
            if (!r)
                throw BadReductionDenominator(
                    "divisor coefficient has p in its denominator");
            out.push_back(*r);
        }
        return out;
    };
    // y scales by d between y^2 = f and the integral model, so v does too.
    MumfordFp r{FpPoly(K, reduce_coeffs(D.u.c, 1)),
                FpPoly(K, reduce_coeffs(D.v.c, c.scale))};
    validate_mumford(curve_poly_fp(c, p), r);
    return r;
}

} // namespace descent
