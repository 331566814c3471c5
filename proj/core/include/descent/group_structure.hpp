#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "descent/curve.hpp"
#include "descent/ec.hpp"
#include "descent/mumford.hpp"

namespace descent {

/// Invariant-factor decomposition Z/d1 x ... x Z/dk with d1 | d2 | ... | dk,
/// together with discrete logarithms for every group element in a fixed
/// canonical element order.
struct AbelianGroupStructure {
    uint64_t order = 1;
    std::vector<uint64_t> invariant_factors; // ascending divisibility
    /// generators[i] is the element index generating the i-th cyclic factor.
    std::vector<size_t> generators;
    /// dlog[e][i] is the i-th coordinate of element e, 0 <= dlog[e][i] < d_i.
    std::vector<std::vector<uint64_t>> dlog;
};

/// Recovers invariant factors and discrete logs of a finite abelian group
/// given by a table: add(i, j) -> index, identity index 0. Deterministic for
/// a fixed element order.
AbelianGroupStructure group_structure_from_table(
    size_t n, const std::function<size_t(size_t, size_t)>& add);

/// All points of E(F_p) in canonical order: identity first, then affine
/// points sorted by (x, y).
std::vector<EcPointFp> ec_points(const EcCurveFp& E);

/// All elements of J(F_p) for an odd quintic model in canonical order:
/// identity, then degree-1 u sorted by (x, y), then degree-2 u sorted by
/// (u0, u1, v0, v1).
std::vector<MumfordFp> jac_elements(const HyperellipticCurve& c, uint32_t p);

/// |J(F_p)| from point counts over F_p and F_{p^2}; genus 1 and 2 only.
uint64_t jac_order_fp(const HyperellipticCurve& c, uint32_t p);

/// Group structure of E(F_p) for a degree-3 model at an odd good prime.
/// Element order matches ec_points.
AbelianGroupStructure ec_group_structure(const HyperellipticCurve& c,
                                         uint32_t p);

/// Group structure of J(F_p) for an odd quintic model at an odd good prime.
/// Element order matches jac_elements. Enumeration is O(p^3); throws
/// EnumerationBudgetExceeded when p exceeds the budget.
AbelianGroupStructure jac_group_structure(const HyperellipticCurve& c,
                                          uint32_t p, uint32_t max_p = 200);

/// Cached variant keyed by (curve, p); safe for concurrent readers.
const AbelianGroupStructure& jac_group_structure_cached(
    const HyperellipticCurve& c, uint32_t p, uint32_t max_p = 200);
void clear_structure_cache();

} // namespace descent
