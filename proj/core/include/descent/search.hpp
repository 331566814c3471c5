#pragma once

#include <cstdint>
#include <vector>

#include "descent/curve.hpp"
#include "descent/sieve.hpp"

namespace descent {

/// All rational points with x = a/b in lowest terms, |a| <= H, 1 <= b <= H,
/// plus the rational points at infinity. An optional filter keeps only
/// points whose reductions land in the allowed subsets at the condition
/// primes (affine_only drops the points at infinity). Canonically sorted
/// and deduplicated; every point satisfies the curve equation exactly.
std::vector<RationalPoint> point_search(const HyperellipticCurve& c,
                                        uint32_t H,
                                        const LocalConditions* filter = nullptr);

} // namespace descent
