#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descent/curve.hpp"
#include "descent/ec.hpp"
#include "descent/group_structure.hpp"
#include "descent/mumford.hpp"

namespace descent {

/// One generator of a Mordell-Weil subgroup: a rational point on the
/// degree-3 target model, or a Mumford divisor on the curve's own Jacobian.
/// Exactly one of the two members is set.
struct SubgroupGenerator {
    std::optional<RationalPoint> point;
    std::optional<MumfordQ> divisor;
};

/// A user-asserted subgroup G of the Mordell-Weil group of the sieve
/// target. Free generators are asserted to have infinite order; torsion
/// generators carry their exact order, verified at validation time. The
/// assumption note is echoed verbatim into every certificate.
struct SubgroupPresentation {
    std::vector<SubgroupGenerator> free_generators;
    std::vector<std::pair<SubgroupGenerator, uint64_t>> torsion_generators;
    std::string assumption_note;
};

/// A morphism from the curve to a degree-3 model, of the shape
/// X = xn(x)/xd(x), Y = y * yn(x)/yd(x). Points where a denominator
/// vanishes -- the points at infinity always included -- take their images
/// from the exceptional table: infinity kinds are keyed per branch, affine
/// entries are keyed by x and cover both y-branches.
struct MorphismSpec {
    RatPoly x_num{QQCtx{}}, x_den{QQCtx{}};
    RatPoly y_num{QQCtx{}}, y_den{QQCtx{}};

    struct Exceptional {
        RationalPoint::Kind kind = RationalPoint::Affine;
        BigRat x;             // meaningful for affine keys only
        RationalPoint image;  // point on the target model
    };
    std::vector<Exceptional> exceptional_images;
};

/// Allowed subsets of C(F_p), per prime; primes without an entry allow all
/// points. An explicit point list and an x-residue filter are the two
/// supported forms; affine_only additionally drops every infinity point at
/// every prime (needed to sieve for affine points on curves whose points
/// at infinity are rational).
struct LocalConditions {
    bool affine_only = false;
    struct PerPrime {
        uint32_t p = 0;
        std::optional<std::vector<CurvePointFp>> points;
        std::optional<std::vector<uint32_t>> x_residues;
    };
    std::vector<PerPrime> per_prime;
};

/// Full sieve input. When target is absent the sieve runs through the
/// curve's own Jacobian (odd quintic models only); when present it must be
/// a degree-3 model reached through the accompanying morphism.
struct SieveProblem {
    HyperellipticCurve curve;
    std::optional<HyperellipticCurve> target;
    std::optional<MorphismSpec> morphism;
    SubgroupPresentation subgroup;
    uint64_t modulus = 1;           // N
    std::vector<uint32_t> primes;   // S, processed ascending
    LocalConditions conditions;
};

/// Audit data for one prime: target group shape, #C(F_p), the allowed
/// point classes W_p in the quotient coordinates, and the cosets alive
/// after filtering at this prime.
struct PerPrimeReport {
    uint32_t p = 0;
    uint64_t group_order = 0;
    std::vector<uint64_t> invariants;
    uint64_t curve_points = 0;
    std::vector<std::vector<uint64_t>> target_classes;
    std::vector<std::vector<uint64_t>> surviving;  // sieve mode only
    uint64_t survivors_after = 0;
};

/// Outcome of a sieve or Poonen run. EMPTY proves, under the recorded
/// subgroup assumption, that no rational point satisfies the local
/// conditions; SURVIVORS proves nothing. The digest authenticates the
/// canonical JSON form with the digest field removed.
struct SieveCertificate {
    std::string mode;     // "sieve" or "poonen"
    std::string outcome;  // "EMPTY" or "SURVIVORS"
    std::vector<std::vector<uint64_t>> survivors;
    std::vector<PerPrimeReport> per_prime;
    std::string assumptions;
    SieveProblem problem;
    std::string digest;
};

/// Checks the defining identity f yn^2 xd^3 = (sum g_i xn^i xd^(3-i)) yd^2
/// against the target model g, the shape preconditions, and the presence
/// of exceptional images for the points at infinity.
void validate_morphism(const HyperellipticCurve& c, const MorphismSpec& phi,
                       const HyperellipticCurve& target);

/// Checks generators lie on the ambient object and torsion orders are
/// exact; throws InvalidSubgroup.
void validate_subgroup(const SieveProblem& prob);

/// { phi(P) : P in C(F_p) } as normalized Weierstrass points, sorted and
/// deduplicated.
std::vector<EcPointFp> morphism_image(const HyperellipticCurve& c,
                                      const MorphismSpec& phi,
                                      const HyperellipticCurve& target,
                                      uint32_t p);

/// With mw the FULL (finite, torsion-only) Mordell-Weil group of the
/// target, solves phi(P) = Q fiber by fiber and returns exactly the
/// rational points of the curve. Throws RequiresFiniteMW when a free
/// generator is present.
std::vector<RationalPoint> finite_mw_pullback(const HyperellipticCurve& c,
                                              const MorphismSpec& phi,
                                              const HyperellipticCurve& target,
                                              const SubgroupPresentation& mw);

/// dlog coordinates at p (in the target group structure) of every
/// generator, free first then torsion.
std::vector<std::vector<uint64_t>> subgroup_reduction(const SieveProblem& prob,
                                                      uint32_t p);

/// The Mordell-Weil sieve: intersects coset images of G/NG with allowed
/// curve-point images in J(F_p)/N J(F_p) for each p in S, ascending,
/// stopping early once no coset survives.
SieveCertificate sieve_run(const SieveProblem& prob,
                           uint64_t coset_budget = 1'000'000);

/// The modulus-free variant: enumerates the image of G in the product of
/// the J(F_p) by subgroup closure and intersects with the product of the
/// allowed point image sets. The modulus of the problem is ignored.
SieveCertificate poonen_run(const SieveProblem& prob,
                            uint64_t image_budget = 10'000'000);

/// Re-runs the computation recorded in a certificate's problem echo.
SieveCertificate replay_certificate(const SieveCertificate& cert);

std::string sieve_problem_to_json_string(const SieveProblem& prob);
SieveProblem sieve_problem_from_json_string(const std::string& text);

/// Canonical JSON with alphabetically ordered keys; the digest field holds
/// an FNV-1a 64-bit hash of the compact dump with digest removed.
std::string certificate_to_json_string(const SieveCertificate& cert);
SieveCertificate certificate_from_json_string(const std::string& text);

} // namespace descent
