#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/poly.hpp"
#include "descent/rat.hpp"

namespace descent {

/// A smooth projective hyperelliptic curve given by an affine model
/// y^2 = f(x) with rational coefficients, 3 <= deg f <= 6 and f squarefree.
/// The integral model (d^2 f for d the lcm of the coefficient denominators,
/// reached by scaling y) is kept alongside, with its discriminant.
struct HyperellipticCurve {
    std::vector<BigRat> f;  // lowest degree first, nonzero leading coefficient
    std::vector<BigInt> F;  // integral model d^2 f
    BigInt scale;           // the d above
    BigInt disc;            // discriminant of F
    std::vector<uint32_t> bad_primes;  // odd primes dividing lc(F) disc, plus 2

    int degree() const { return static_cast<int>(f.size()) - 1; }
    int genus() const { return (degree() - 1) / 2; }
    bool odd_degree_model() const { return degree() % 2 == 1; }
    const BigRat& leading() const { return f.back(); }
    BigInt leading_integral() const { return F.back(); }
};

/// Validates degree and squarefreeness and fills the derived fields.
HyperellipticCurve new_curve(std::vector<BigRat> f);

/// f as a rational polynomial.
inline RatPoly curve_poly_q(const HyperellipticCurve& c) {
    return RatPoly(QQCtx{}, c.f);
}

/// The integral model F reduced mod p.
inline FpPoly curve_poly_fp(const HyperellipticCurve& c, uint32_t p) {
    return poly_reduce(c.F, p);
}

/// Discriminant of the integral model: the resultant of F and F'
/// normalized by the leading coefficient, with the usual sign
/// (-1)^(n(n-1)/2).
BigInt discriminant(const HyperellipticCurve& c);

/// Odd primes of good reduction up to the bound (p not dividing lc(F) disc).
std::vector<uint32_t> good_primes(const HyperellipticCurve& c, uint32_t bound);

bool is_good_prime(const HyperellipticCurve& c, uint32_t p);

/// A point of C(F_p): affine (x, y), or a point at infinity. Odd-degree
/// models have the single point InfOdd; even-degree models have InfPlus
/// and InfMinus exactly when lc(f) is a square mod p, the plus branch
/// being the one with y/x^(g+1) reducing to the canonical square root.
struct CurvePointFp {
    enum Kind { Affine, InfOdd, InfPlus, InfMinus };
    Kind kind = Affine;
    uint32_t x = 0, y = 0;

    bool operator==(const CurvePointFp& o) const {
        if (kind != o.kind) return false;
        if (kind != Affine) return true;
        return x == o.x && y == o.y;
    }
    bool operator<(const CurvePointFp& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

/// All points of C(F_p) at an odd prime of good reduction, affine points
/// first sorted by (x, y), then infinity.
std::vector<CurvePointFp> points_over_fp(const HyperellipticCurve& c, uint32_t p);

/// #C(F_{p^2}) at an odd prime of good reduction, via the quadratic
/// character of the norm on F_{p^2}. Infinity contributes 1 for odd-degree
/// models and always 2 for even-degree models (every F_p scalar is a
/// square in F_{p^2}).
uint64_t count_points_fp2(const HyperellipticCurve& c, uint32_t p);

/// A rational point on the projective model.
struct RationalPoint {
    enum Kind { Affine, InfOdd, InfPlus, InfMinus };
    Kind kind = Affine;
    BigRat x, y;

    bool operator==(const RationalPoint& o) const {
        if (kind != o.kind) return false;
        if (kind != Affine) return true;
        return x == o.x && y == o.y;
    }
    bool operator<(const RationalPoint& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

/// Checks y^2 = f(x) (or legality of the infinity kind over Q) and throws
/// PointNotOnCurve otherwise.
void validate_point(const HyperellipticCurve& c, const RationalPoint& pt);

/// Reduction of a rational point at an odd good prime, landing on the
/// integral model (y is scaled along with the model change). Affine points
/// with p in a denominator of x reduce to the appropriate infinity point
/// (the branch is read off from y/x^(g+1)).
CurvePointFp reduce_rational_point(const HyperellipticCurve& c,
                                   const RationalPoint& pt, uint32_t p);

/// Model change x -> r + 1/x, y -> y/x^(g+1) for a rational root r of f:
/// returns the odd-degree coefficient vector (degree 2g+1) of the image
/// model. Requires f(r) = 0 and an even-degree input.
std::vector<BigRat> odd_model_via_root(const HyperellipticCurve& c,
                                       const BigRat& r);

/// Curve JSON: {"f": ["c0", "c1", ...]} lowest degree first, rationals as
/// "n" or "n/d" strings.
std::string curve_to_json_string(const HyperellipticCurve& c);
HyperellipticCurve curve_from_json_string(const std::string& text);

std::string point_to_json_string(const RationalPoint& pt);
RationalPoint point_from_json_string(const std::string& text);

} // namespace descent
