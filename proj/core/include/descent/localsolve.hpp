#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "descent/curve.hpp"
#include "descent/real_locus.hpp"

namespace descent {

/// Which affine chart of the projective model a p-adic class lives on:
/// Direct is y^2 = F(x) with x integral; Reciprocal is s^2 = F*(t) with
/// F* the coefficient reversal of F padded to degree 2g+2 and t in p Z_p
/// (covering x with negative valuation, including the points at infinity).
enum class Chart { Direct, Reciprocal };

/// A decided residue class x = rep (mod p^depth) on a chart.
struct DecidedClass {
    Chart chart;
    BigInt rep;
    int depth;
    long valuation;  // v_p of F(rep) at the depth the class was decided
    bool solvable;
};

/// Certificate of solvability: the decided class containing a point, or
/// for exact zeros / Hensel shortcuts the class converging to a root of F.
struct QpWitness {
    Chart chart;
    BigInt rep;
    int depth;
};

/// Verdict for one place of Q.
struct LocalVerdict {
    bool is_real_place = false;
    uint32_t p = 0;
    bool solvable = false;
    std::optional<QpWitness> witness;       // finite solvable places
    std::vector<DecidedClass> refutation;   // finite insolvable places
    std::optional<RealInterval> real_interval;  // real solvable place
};

/// True when the real locus is nonempty (an interval or real infinity).
bool has_real_points(const HyperellipticCurve& c);

/// Detailed real verdict backing has_real_points.
LocalVerdict real_verdict(const HyperellipticCurve& c);

/// Decides C(Q_p) != {} for any prime p by certified splitting of residue
/// classes on the two charts. Throws DepthExceeded if a branch passes
/// depth v_p(disc) + 2 v_p(2) + 4 undecided (an implementation bug, not
/// an input property).
LocalVerdict has_qp_points(const HyperellipticCurve& c, uint32_t p);

/// Everywhere-locally-solvable test over the critical set: the real place,
/// primes dividing 2 lc(F) disc, and for genus 2 the odd good primes
/// p <= 13 (good p >= 17 have F_p-points by the Weil bound, genus 1 good
/// primes always do, so those are skipped). Stops at the first failing
/// place; the verdict list covers every place examined, real first, then
/// primes ascending.
std::pair<bool, std::vector<LocalVerdict>> is_els(const HyperellipticCurve& c);

} // namespace descent
