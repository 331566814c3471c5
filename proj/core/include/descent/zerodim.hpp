#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/rat.hpp"

namespace descent {

/// A finite permutation group on {1, .., n} given by generators.
struct PermGroupSpec {
    uint32_t degree = 1;
    /// Each generator lists the images of 1..n (one-based).
    std::vector<std::vector<uint32_t>> generators;
};

enum class CoverVerdict { Holds, HypothesisFails, DegreeNotOneCounterexample };

/// "holds", "hypothesis_fails" or "degree_not_one_counterexample".
std::string to_string(CoverVerdict v);

/// Tests the counting argument that a transitive action, all of whose
/// elements fix a point, must have degree one. The hypotheses are checked
/// on the generated group; when they hold with degree above one the third
/// verdict is returned, which would signal an implementation bug.
CoverVerdict fixed_point_cover_check(const PermGroupSpec& g,
                                     uint64_t closure_budget = 1'000'000);

enum class SplittingType { Split, Inert, Ramified };

std::string to_string(SplittingType t);

/// Behaviour of x^2 - d at an odd prime p: ramified when p | d, split when
/// d is a nonzero square mod p, inert otherwise.
SplittingType splitting_type(const BigInt& d, uint32_t p);

struct QuadHasseResult {
    bool everywhere_local = false;
    bool global = false;
};

/// Local-global comparison for the disjoint union of the three quadratic
/// schemes attached to d1, d2 and d1*d2: everywhere_local iff at every
/// place of Q at least one of the three is a local square, global iff one
/// of them is a rational square. Only the real place and p | 2*d1*d2 need
/// examination; at every other odd prime the three Legendre symbols
/// multiply to +1, so one of them is +1.
QuadHasseResult quad_etale_hasse_check(const BigInt& d1, const BigInt& d2);

} // namespace descent
