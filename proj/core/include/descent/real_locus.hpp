#pragma once

#include <vector>

#include "descent/curve.hpp"

namespace descent {

/// One endpoint of a maximal interval where f >= 0. Finite endpoints are
/// real roots of f, reported as a rational bracket [lo, hi] of width at
/// most 2^-32 whose f-values straddle zero; approx is the bracket midpoint.
struct RealEndpoint {
    bool infinite = false;
    int direction = 0;  // -1 for -infinity, +1 for +infinity when infinite
    BigRat approx;
    BigRat bracket_lo, bracket_hi;
};

struct RealInterval {
    RealEndpoint lo, hi;
};

/// The set {x real : f(x) >= 0} as maximal closed intervals, ascending,
/// plus whether the model has real points at infinity (odd degree or
/// positive leading coefficient).
struct RealLocusReport {
    std::vector<RealInterval> intervals;
    bool has_real_infinity = false;
};

RealLocusReport real_locus(const HyperellipticCurve& c);

/// Real roots of a squarefree rational polynomial as disjoint brackets
/// [lo, hi] with f(lo) f(hi) < 0, each of width at most 2^-32, ascending.
std::vector<std::pair<BigRat, BigRat>> real_roots(const std::vector<BigRat>& f);

} // namespace descent
