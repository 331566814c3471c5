#include "descent/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "descent/errors.hpp"
#include "descent/primes.hpp"

namespace descent {

namespace {

using nlohmann::json;

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_digest(uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

BigInt big_u64(uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

bool ec_fp_less(const EcPointFp& a, const EcPointFp& b) {
    if (a.infinity != b.infinity) return a.infinity;
    if (a.infinity) return false;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

bool ec_fp_eq(const EcPointFp& a, const EcPointFp& b) {
    if (a.infinity != b.infinity) return false;
    return a.infinity || (a.x == b.x && a.y == b.y);
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
    BigInt m = abs(n);
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : int_factor(m)) {
        std::size_t base = divs.size();
        BigInt pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Distinct rational roots of a nonzero polynomial, via the rational root
/// bound on an integral model.
std::vector<BigRat> rational_roots(const RatPoly& g) {
    std::vector<BigRat> roots;
    if (g.deg() < 1) return roots;
    BigInt den = common_denominator(g.c);
    std::vector<BigInt> a(g.c.size());
    for (std::size_t i = 0; i < g.c.size(); ++i) {
        BigRat t = g.c[i] * BigRat(den);
        a[i] = t.get_num();
    }
    std::size_t low = 0;
    while (a[low] == 0) ++low;
    if (low > 0) roots.push_back(BigRat(0));
    if (low + 1 < a.size()) {
        for (const BigInt& pd : positive_divisors(a[low]))
            for (const BigInt& qd : positive_divisors(a.back())) {
                BigInt g2;
                mpz_gcd(g2.get_mpz_t(), pd.get_mpz_t(), qd.get_mpz_t());
                if (g2 != 1) continue;
                for (int sign : {1, -1}) {
                    BigRat cand(sign * pd, qd);
                    cand.canonicalize();
                    if (g.eval(cand) == 0) roots.push_back(cand);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<SubgroupGenerator> all_generators(const SubgroupPresentation& s) {
    std::vector<SubgroupGenerator> out = s.free_generators;
    for (const auto& t : s.torsion_generators) out.push_back(t.first);
    return out;
}

bool x_map_is_constant(const MorphismSpec& m) {
    if (m.x_num.is_zero()) return true;
    if (m.x_num.deg() != m.x_den.deg()) return false;
    BigRat r = m.x_num.lc() / m.x_den.lc();
    return poly_sub(m.x_num, poly_scale(m.x_den, r)).is_zero();
}

void validate_subgroup_on_target(const HyperellipticCurve& target,
                                 const SubgroupPresentation& s) {
    EcCurveQ e = ec_from_cubic(target);
    auto lift = [&](const SubgroupGenerator& g) {
        if (!g.point || g.divisor)
            throw InvalidSubgroup(
                "generators on a degree-3 target must be given as points");
        try {
            validate_point(target, *g.point);
        } catch (const Error& err) {
            throw InvalidSubgroup(std::string("generator rejected: ") +
                                  err.what());
        }
        return ec_lift_point(target, *g.point);
    };
    for (const auto& g : s.free_generators)
        if (lift(g).infinity)
            throw InvalidSubgroup("a free generator cannot be the identity");
    for (const auto& [g, o] : s.torsion_generators) {
        EcPointQ P = lift(g);
        if (o == 0) throw InvalidSubgroup("torsion orders must be positive");
        if (!ec_mul(e, big_u64(o), P).infinity)
            throw InvalidSubgroup(
                "claimed torsion order does not annihilate the generator");
        for (const auto& [q, mult] : factor_u64(o)) {
            (void)mult;
            if (ec_mul(e, big_u64(o / q), P).infinity)
                throw InvalidSubgroup("claimed torsion order is not exact");
        }
    }
}

void validate_subgroup_on_jacobian(const HyperellipticCurve& curve,
                                   const SubgroupPresentation& s) {
    RatPoly f = curve_poly_q(curve);
    auto check = [&](const SubgroupGenerator& g) -> const MumfordQ& {
        if (!g.divisor || g.point)
            throw InvalidSubgroup(
                "generators on the curve's own Jacobian must be Mumford "
                "divisors");
        try {
            validate_mumford(f, *g.divisor);
        } catch (const Error& err) {
            throw InvalidSubgroup(std::string("generator rejected: ") +
                                  err.what());
        }
        return *g.divisor;
    };
    for (const auto& g : s.free_generators)
        if (check(g).is_identity())
            throw InvalidSubgroup("a free generator cannot be the identity");
    for (const auto& [g, o] : s.torsion_generators) {
        const MumfordQ& D = check(g);
        if (o == 0) throw InvalidSubgroup("torsion orders must be positive");
        if (!cantor_mul(f, big_u64(o), D).is_identity())
            throw InvalidSubgroup(
                "claimed torsion order does not annihilate the generator");
        for (const auto& [q, mult] : factor_u64(o)) {
            (void)mult;
            if (cantor_mul(f, big_u64(o / q), D).is_identity())
                throw InvalidSubgroup("claimed torsion order is not exact");
        }
    }
}

void finalize_digest(SieveCertificate& cert);

} // namespace

void validate_morphism(const HyperellipticCurve& c, const MorphismSpec& phi,
                       const HyperellipticCurve& target) {
    if (target.degree() != 3)
        throw InvalidMorphism("the target must be a degree-3 model");
    if (phi.x_den.is_zero() || phi.y_den.is_zero())
        throw InvalidMorphism("denominator polynomials must be nonzero");
    if (x_map_is_constant(phi))
        throw InvalidMorphism("the x-map must be nonconstant");

    QQCtx K;
    RatPoly f = curve_poly_q(c);
    RatPoly lhs =
        poly_mul(poly_mul(f, poly_mul(phi.y_num, phi.y_num)),
                 poly_mul(phi.x_den, poly_mul(phi.x_den, phi.x_den)));
    std::vector<RatPoly> xd_pow{
        poly_const(K, K.one()), phi.x_den, poly_mul(phi.x_den, phi.x_den),
        poly_mul(phi.x_den, poly_mul(phi.x_den, phi.x_den))};
    RatPoly rhs = poly_zero(K);
    RatPoly xn_pow = poly_const(K, K.one());
    for (std::size_t i = 0; i <= 3; ++i) {
        rhs = poly_add(rhs,
                       poly_scale(poly_mul(xn_pow, xd_pow[3 - i]), target.f[i]));
        if (i < 3) xn_pow = poly_mul(xn_pow, phi.x_num);
    }
    rhs = poly_mul(rhs, poly_mul(phi.y_den, phi.y_den));
    if (!(lhs == rhs))
        throw InvalidMorphism("the models are not compatible under the map");

    bool odd = c.odd_degree_model();
    bool have_odd = false, have_plus = false, have_minus = false;
    std::set<std::string> keys;
    for (const auto& e : phi.exceptional_images) {
        try {
            validate_point(target, e.image);
        } catch (const Error& err) {
            throw InvalidMorphism(std::string("exceptional image rejected: ") +
                                  err.what());
        }
        std::string key;
        switch (e.kind) {
            case RationalPoint::InfOdd:
                if (!odd)
                    throw InvalidMorphism(
                        "infinity kind does not match the model degree");
                have_odd = true;
                key = "inf";
                break;
            case RationalPoint::InfPlus:
            case RationalPoint::InfMinus:
                if (odd)
                    throw InvalidMorphism(
                        "infinity kind does not match the model degree");
                (e.kind == RationalPoint::InfPlus ? have_plus : have_minus) =
                    true;
                key = e.kind == RationalPoint::InfPlus ? "inf+" : "inf-";
                break;
            case RationalPoint::Affine:
                if (!(phi.x_den.eval(e.x) == 0) &&
                    !(phi.y_den.eval(e.x) == 0))
                    throw InvalidMorphism(
                        "exceptional x is not a zero of a denominator");
                key = "x:" + to_string(e.x);
                break;
        }
        if (!keys.insert(key).second)
            throw InvalidMorphism("duplicate exceptional entry");
    }
    if (odd && !have_odd)
        throw InvalidMorphism(
            "an image for the point at infinity is required");
    if (!odd && !(have_plus && have_minus))
        throw InvalidMorphism(
            "images for both branches at infinity are required");
}

void validate_subgroup(const SieveProblem& prob) {
    if (prob.target)
        validate_subgroup_on_target(*prob.target, prob.subgroup);
    else
        validate_subgroup_on_jacobian(prob.curve, prob.subgroup);
}

namespace {

/// Structural and arithmetic checks, plus canonicalization: S sorted and
/// deduplicated, conditions sorted by prime with sorted entries.
SieveProblem validated_problem(const SieveProblem& in) {
    SieveProblem prob = in;
    if (prob.target.has_value() != prob.morphism.has_value())
        throw ParseError(
            "a degree-3 target and a morphism must be supplied together");
    if (!prob.target && prob.curve.degree() != 5)
        throw EvenModelUnsupported(
            "sieving through the curve's own Jacobian needs an odd quintic "
            "model");
    if (prob.modulus == 0) throw ParseError("the modulus must be at least 1");
    if (prob.target) validate_morphism(prob.curve, *prob.morphism, *prob.target);
    validate_subgroup(prob);

    std::sort(prob.primes.begin(), prob.primes.end());
    prob.primes.erase(std::unique(prob.primes.begin(), prob.primes.end()),
                      prob.primes.end());
    for (uint32_t p : prob.primes) {
        bool ok = p > 2 && is_prime_u64(p) && is_good_prime(prob.curve, p) &&
                  (!prob.target || is_good_prime(*prob.target, p));
        if (!ok)
            throw BadPrimeInS(std::to_string(p) +
                              " is not an odd prime of good reduction for "
                              "every model involved");
    }

    std::set<uint32_t> sset(prob.primes.begin(), prob.primes.end());
    std::set<uint32_t> seen;
    for (auto& e : prob.conditions.per_prime) {
        if (!sset.count(e.p))
            throw ConditionOutsideS("local condition at p = " +
                                    std::to_string(e.p) +
                                    ", which is not in S");
        if (!seen.insert(e.p).second)
            throw InvalidLocalCondition("duplicate local condition at p = " +
                                        std::to_string(e.p));
        if (e.points && e.x_residues)
            throw InvalidLocalCondition(
                "give either points or x-residues at p = " +
                std::to_string(e.p) + ", not both");
        if (e.points) {
            auto all = points_over_fp(prob.curve, e.p);
            for (const auto& P : *e.points)
                if (std::find(all.begin(), all.end(), P) == all.end())
                    throw InvalidLocalCondition(
                        "allowed point does not lie on the curve at p = " +
                        std::to_string(e.p));
            std::sort(e.points->begin(), e.points->end());
            e.points->erase(std::unique(e.points->begin(), e.points->end()),
                            e.points->end());
        }
        if (e.x_residues) {
            for (uint32_t x : *e.x_residues)
                if (x >= e.p)
                    throw InvalidLocalCondition(
                        "x residue out of range at p = " +
                        std::to_string(e.p));
            std::sort(e.x_residues->begin(), e.x_residues->end());
            e.x_residues->erase(
                std::unique(e.x_residues->begin(), e.x_residues->end()),
                e.x_residues->end());
        }
    }
    std::sort(prob.conditions.per_prime.begin(),
              prob.conditions.per_prime.end(),
              [](const LocalConditions::PerPrime& a,
                 const LocalConditions::PerPrime& b) { return a.p < b.p; });
    return prob;
}

/// The allowed subset of C(F_p) under the problem's local conditions;
/// assumes a canonicalized problem.
std::vector<CurvePointFp> apply_conditions(
    const LocalConditions& lc, uint32_t p,
    const std::vector<CurvePointFp>& all) {
    const LocalConditions::PerPrime* entry = nullptr;
    for (const auto& e : lc.per_prime)
        if (e.p == p) entry = &e;
    std::vector<CurvePointFp> out;
    for (const auto& P : all) {
        if (lc.affine_only && P.kind != CurvePointFp::Affine) continue;
        if (entry) {
            if (entry->points) {
                if (!std::binary_search(entry->points->begin(),
                                        entry->points->end(), P))
                    continue;
            } else if (entry->x_residues) {
                if (P.kind != CurvePointFp::Affine) continue;
                if (!std::binary_search(entry->x_residues->begin(),
                                        entry->x_residues->end(), P.x))
                    continue;
            }
        }
        out.push_back(P);
    }
    return out;
}

/// The morphism with coefficients reduced mod p, together with the scale
/// constants relating the rational models to their integral forms.
struct MorphismFp {
    FpCtx K;
    FpPoly xn, xd, yn, yd;
    uint32_t lc_target = 0, scale_target = 0, scale_curve = 0;
};

MorphismFp reduce_morphism(const HyperellipticCurve& c, const MorphismSpec& m,
                           const HyperellipticCurve& target, uint32_t p) {
    return MorphismFp{FpCtx(p),
                      poly_reduce(m.x_num.c, p),
                      poly_reduce(m.x_den.c, p),
                      poly_reduce(m.y_num.c, p),
                      poly_reduce(m.y_den.c, p),
                      mod_p(target.leading_integral(), p),
                      mod_p(target.scale, p),
                      mod_p(c.scale, p)};
}

/// phi(P) in the integral Weierstrass view of the target. Stored curve
/// points carry the integral y-coordinate, hence the scale corrections.
EcPointFp image_point_fp(const MorphismSpec& m,
                         const HyperellipticCurve& target,
                         const MorphismFp& mf, const EcCurveFp& E, uint32_t p,
                         const CurvePointFp& P) {
    if (P.kind != CurvePointFp::Affine) {
        RationalPoint::Kind want =
            P.kind == CurvePointFp::InfOdd    ? RationalPoint::InfOdd
            : P.kind == CurvePointFp::InfPlus ? RationalPoint::InfPlus
                                              : RationalPoint::InfMinus;
        for (const auto& e : m.exceptional_images)
            if (e.kind == want)
                return ec_reduce_point(ec_lift_point(target, e.image), p);
        throw UnassignedExceptionalPoint(
            "no image assigned to a point at infinity");
    }
    const FpCtx& K = mf.K;
    uint32_t xdv = mf.xd.eval(P.x), ydv = mf.yd.eval(P.x);
    if (xdv == 0 || ydv == 0) {
        for (const auto& e : m.exceptional_images) {
            if (e.kind != RationalPoint::Affine) continue;
            auto ex = mod_p(e.x, p);
            if (ex && *ex == P.x)
                return ec_reduce_point(ec_lift_point(target, e.image), p);
        }
        throw UnassignedExceptionalPoint(
            "a denominator vanishes at x = " + std::to_string(P.x) + " mod " +
            std::to_string(p) + " and no image is assigned");
    }
    uint32_t xi = K.mul(mf.lc_target, K.div(mf.xn.eval(P.x), xdv));
    uint32_t eta =
        K.div(K.mul(K.mul(K.mul(mf.lc_target, mf.scale_target), P.y),
                    mf.yn.eval(P.x)),
              K.mul(mf.scale_curve, ydv));
    EcPointFp out{false, xi, eta};
    if (!ec_on_curve(E, out))
        throw InvalidMorphism("computed image leaves the target equation");
    return out;
}

/// Everything needed at one prime: the reduced target group with its
/// element table and structure, and the reduced morphism when sieving
/// through a degree-3 model.
struct TargetCtx {
    uint32_t p = 0;
    bool elliptic = false;
    std::optional<EcCurveFp> E;
    std::vector<EcPointFp> ec_els;
    std::optional<FpPoly> fpoly;
    std::vector<MumfordFp> jels;
    AbelianGroupStructure st;
    std::optional<MorphismFp> phi;

    std::size_t index_of(const EcPointFp& P) const {
        auto it =
            std::lower_bound(ec_els.begin(), ec_els.end(), P, ec_fp_less);
        if (it == ec_els.end() || !ec_fp_eq(*it, P))
            throw Error("internal: point missing from the group table");
        return static_cast<std::size_t>(it - ec_els.begin());
    }
    std::size_t index_of(const MumfordFp& D) const {
        auto it = std::lower_bound(jels.begin(), jels.end(), D, MumfordLess{});
        if (it == jels.end() || !mumford_eq(*it, D))
            throw Error("internal: divisor missing from the group table");
        return static_cast<std::size_t>(it - jels.begin());
    }
};

TargetCtx make_target_ctx(const SieveProblem& prob, uint32_t p) {
    TargetCtx t;
    t.p = p;
    if (prob.target) {
        t.elliptic = true;
        t.E = ec_reduce_curve(ec_from_cubic(*prob.target), p);
        t.ec_els = ec_points(*t.E);
        t.st = ec_group_structure(*prob.target, p);
        if (prob.morphism)
            t.phi = reduce_morphism(prob.curve, *prob.morphism, *prob.target, p);
    } else {
        t.fpoly = curve_poly_fp(prob.curve, p);
        t.jels = jac_elements(prob.curve, p);
        t.st = jac_group_structure_cached(prob.curve, p);
    }
    return t;
}

std::size_t curve_point_class(const SieveProblem& prob, const TargetCtx& t,
                              const CurvePointFp& P) {
    if (t.elliptic)
        return t.index_of(
            image_point_fp(*prob.morphism, *prob.target, *t.phi, *t.E, t.p, P));
    return t.index_of(abel_jacobi_fp(prob.curve, t.p, P));
}

std::size_t generator_class(const SieveProblem& prob, const TargetCtx& t,
                            const SubgroupGenerator& g) {
    if (t.elliptic)
        return t.index_of(
            ec_reduce_point(ec_lift_point(*prob.target, *g.point), t.p));
    return t.index_of(mumford_reduce(prob.curve, *g.divisor, t.p));
}

} // namespace

std::vector<EcPointFp> morphism_image(const HyperellipticCurve& c,
                                      const MorphismSpec& phi,
                                      const HyperellipticCurve& target,
                                      uint32_t p) {
    validate_morphism(c, phi, target);
    if (p <= 2 || !is_prime_u64(p) || !is_good_prime(c, p) ||
        !is_good_prime(target, p))
        throw BadPrimeInS(std::to_string(p) +
                          " is not an odd prime of good reduction for both "
                          "models");
    EcCurveFp E = ec_reduce_curve(ec_from_cubic(target), p);
    MorphismFp mf = reduce_morphism(c, phi, target, p);
    std::vector<EcPointFp> out;
    for (const auto& P : points_over_fp(c, p))
        out.push_back(image_point_fp(phi, target, mf, E, p, P));
    std::sort(out.begin(), out.end(), ec_fp_less);
    out.erase(std::unique(out.begin(), out.end(), ec_fp_eq), out.end());
    return out;
}

std::vector<RationalPoint> finite_mw_pullback(const HyperellipticCurve& c,
                                              const MorphismSpec& phi,
                                              const HyperellipticCurve& target,
                                              const SubgroupPresentation& mw) {
    if (!mw.free_generators.empty())
        throw RequiresFiniteMW(
            "the target group must be finite and fully listed; a generator "
            "of infinite order was supplied");
    validate_morphism(c, phi, target);
    validate_subgroup_on_target(target, mw);

    EcCurveQ e = ec_from_cubic(target);
    std::vector<EcPointQ> gens;
    std::vector<uint64_t> orders;
    for (const auto& [g, o] : mw.torsion_generators) {
        gens.push_back(ec_lift_point(target, *g.point));
        orders.push_back(o);
    }

    // Every element of the (finite) group, computed once per distinct point.
    std::vector<EcPointQ> elements;
    std::set<std::string> seen;
    std::vector<uint64_t> expo(orders.size(), 0);
    for (;;) {
        EcPointQ Q = ec_identity(e);
        for (std::size_t i = 0; i < gens.size(); ++i)
            Q = ec_add(e, Q, ec_mul(e, big_u64(expo[i]), gens[i]));
        std::string key =
            Q.infinity ? "O" : to_string(Q.x) + "," + to_string(Q.y);
        if (seen.insert(key).second) elements.push_back(Q);
        std::size_t i = orders.size();
        for (;;) {
            if (i == 0) goto enumerated;
            --i;
            if (++expo[i] < orders[i]) break;
            expo[i] = 0;
        }
    }
enumerated:;

    RatPoly f = curve_poly_q(c);
    BigRat l(target.leading_integral());
    BigRat ld = l * BigRat(target.scale);
    std::vector<RationalPoint> out;
    auto push_points_at_x = [&](const BigRat& x0) {
        BigRat fx = f.eval(x0);
        if (fx == 0) {
            out.push_back({RationalPoint::Affine, x0, BigRat(0)});
        } else {
            BigRat r;
            if (rat_is_square(fx, &r)) {
                out.push_back({RationalPoint::Affine, x0, r});
                out.push_back({RationalPoint::Affine, x0, -r});
            }
        }
    };

    for (const EcPointQ& Q : elements) {
        RationalPoint tq;
        if (Q.infinity) {
            tq.kind = RationalPoint::InfOdd;
        } else {
            tq.kind = RationalPoint::Affine;
            tq.x = Q.x / l;
            tq.y = Q.y / ld;
        }

        for (const auto& ex : phi.exceptional_images) {
            if (!(ex.image == tq)) continue;
            switch (ex.kind) {
                case RationalPoint::InfOdd:
                    out.push_back({RationalPoint::InfOdd, BigRat(), BigRat()});
                    break;
                case RationalPoint::InfPlus:
                case RationalPoint::InfMinus:
                    if (rat_is_square(c.leading()))
                        out.push_back({ex.kind, BigRat(), BigRat()});
                    break;
                case RationalPoint::Affine:
                    push_points_at_x(ex.x);
                    break;
            }
        }

        if (tq.kind != RationalPoint::Affine) continue;
        RatPoly fiber = poly_sub(phi.x_num, poly_scale(phi.x_den, tq.x));
        if (fiber.is_zero())
            throw UnsupportedMorphismShape(
                "the fiber over a point is not zero-dimensional");
        for (const BigRat& x0 : rational_roots(fiber)) {
            bool covered = false;
            for (const auto& ex : phi.exceptional_images)
                if (ex.kind == RationalPoint::Affine && ex.x == x0)
                    covered = true;
            if (covered) continue;
            BigRat xdv = phi.x_den.eval(x0), ydv = phi.y_den.eval(x0);
            if (xdv == 0 || ydv == 0)
                throw UnassignedExceptionalPoint(
                    "a denominator vanishes at a fiber point with no "
                    "assigned image");
            BigRat ynv = phi.y_num.eval(x0);
            if (ynv == 0) {
                if (tq.y == 0) push_points_at_x(x0);
                continue;
            }
            BigRat y0 = tq.y * ydv / ynv;
            if (f.eval(x0) == y0 * y0)
                out.push_back({RationalPoint::Affine, x0, y0});
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<uint64_t>> subgroup_reduction(const SieveProblem& prob,
                                                      uint32_t p) {
    if (prob.target.has_value() != prob.morphism.has_value())
        throw ParseError(
            "a degree-3 target and a morphism must be supplied together");
    if (!prob.target && prob.curve.degree() != 5)
        throw EvenModelUnsupported(
            "the curve's own Jacobian is supported for odd quintic models "
            "only");
    validate_subgroup(prob);
    bool good = p > 2 && is_prime_u64(p) && is_good_prime(prob.curve, p) &&
                (!prob.target || is_good_prime(*prob.target, p));
    if (!good)
        throw BadPrimeInS(std::to_string(p) +
                          " is not an odd prime of good reduction");
    TargetCtx t = make_target_ctx(prob, p);
    std::vector<std::vector<uint64_t>> out;
    for (const auto& g : all_generators(prob.subgroup))
        out.push_back(t.st.dlog[generator_class(prob, t, g)]);
    return out;
}

SieveCertificate sieve_run(const SieveProblem& in, uint64_t coset_budget) {
    SieveProblem prob = validated_problem(in);
    const uint64_t N = prob.modulus;

    std::vector<uint64_t> radices(prob.subgroup.free_generators.size(), N);
    for (const auto& [g, o] : prob.subgroup.torsion_generators)
        radices.push_back(std::gcd(o, N));
    uint64_t total = 1;
    for (uint64_t d : radices) {
        if (total > coset_budget / d)
            throw CosetBudgetExceeded(
                "the coset space exceeds the budget of " +
                std::to_string(coset_budget));
        total *= d;
    }

    // Coset labels in lexicographic order, free exponents first.
    std::vector<std::vector<uint64_t>> labels;
    if (radices.empty()) {
        labels.push_back({});
    } else {
        std::vector<uint64_t> cur(radices.size(), 0);
        for (;;) {
            labels.push_back(cur);
            std::size_t i = radices.size();
            for (;;) {
                if (i == 0) goto enumerated;
                --i;
                if (++cur[i] < radices[i]) break;
                cur[i] = 0;
            }
        }
    enumerated:;
    }

    SieveCertificate cert;
    cert.mode = "sieve";
    std::vector<std::size_t> alive(labels.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});

    std::vector<SubgroupGenerator> gens = all_generators(prob.subgroup);
    for (uint32_t p : prob.primes) {
        TargetCtx t = make_target_ctx(prob, p);
        std::vector<CurvePointFp> all = points_over_fp(prob.curve, p);
        std::vector<CurvePointFp> allowed =
            apply_conditions(prob.conditions, p, all);

        std::size_t k = t.st.invariant_factors.size();
        std::vector<uint64_t> q(k);
        for (std::size_t i = 0; i < k; ++i)
            q[i] = std::gcd(t.st.invariant_factors[i], N);

        std::vector<std::vector<uint64_t>> genq;
        for (const auto& g : gens) {
            std::vector<uint64_t> co = t.st.dlog[generator_class(prob, t, g)];
            for (std::size_t i = 0; i < k; ++i) co[i] %= q[i];
            genq.push_back(std::move(co));
        }

        std::vector<std::vector<uint64_t>> W;
        for (const auto& P : allowed) {
            std::vector<uint64_t> co = t.st.dlog[curve_point_class(prob, t, P)];
            for (std::size_t i = 0; i < k; ++i) co[i] %= q[i];
            W.push_back(std::move(co));
        }
        std::sort(W.begin(), W.end());
        W.erase(std::unique(W.begin(), W.end()), W.end());

        std::vector<std::size_t> next;
        std::vector<uint64_t> cls(k);
        for (std::size_t li : alive) {
            const std::vector<uint64_t>& a = labels[li];
            std::fill(cls.begin(), cls.end(), 0);
            for (std::size_t gi = 0; gi < a.size(); ++gi)
                for (std::size_t ci = 0; ci < k; ++ci)
                    cls[ci] = (cls[ci] + (a[gi] % q[ci]) * genq[gi][ci]) % q[ci];
            if (std::binary_search(W.begin(), W.end(), cls)) next.push_back(li);
        }
        alive = std::move(next);

        PerPrimeReport rep;
        rep.p = p;
        rep.group_order = t.st.order;
        rep.invariants = t.st.invariant_factors;
        rep.curve_points = all.size();
        rep.target_classes = std::move(W);
        for (std::size_t li : alive) rep.surviving.push_back(labels[li]);
        rep.survivors_after = alive.size();
        cert.per_prime.push_back(std::move(rep));
        if (alive.empty()) break;
    }

    for (std::size_t li : alive) cert.survivors.push_back(labels[li]);
    cert.outcome = alive.empty() ? "EMPTY" : "SURVIVORS";
    cert.assumptions = prob.subgroup.assumption_note;
    cert.problem = std::move(prob);
    finalize_digest(cert);
    return cert;
}

SieveCertificate poonen_run(const SieveProblem& in, uint64_t image_budget) {
    SieveProblem prob = validated_problem(in);
    std::vector<SubgroupGenerator> gens = all_generators(prob.subgroup);

    // One pass over the primes collects everything the closure and the
    // filtering need, so the per-prime element tables can be discarded.
    struct PrimeData {
        uint32_t p = 0;
        uint64_t order = 0;
        std::vector<uint64_t> invariants;
        uint64_t curve_points = 0;
        std::vector<std::vector<uint64_t>> W;
        std::vector<std::vector<uint64_t>> gencoords;
    };
    std::vector<PrimeData> data;
    for (uint32_t p : prob.primes) {
        TargetCtx t = make_target_ctx(prob, p);
        std::vector<CurvePointFp> all = points_over_fp(prob.curve, p);
        std::vector<CurvePointFp> allowed =
            apply_conditions(prob.conditions, p, all);
        PrimeData d;
        d.p = p;
        d.order = t.st.order;
        d.invariants = t.st.invariant_factors;
        d.curve_points = all.size();
        for (const auto& P : allowed)
            d.W.push_back(t.st.dlog[curve_point_class(prob, t, P)]);
        std::sort(d.W.begin(), d.W.end());
        d.W.erase(std::unique(d.W.begin(), d.W.end()), d.W.end());
        for (const auto& g : gens)
            d.gencoords.push_back(t.st.dlog[generator_class(prob, t, g)]);
        data.push_back(std::move(d));
    }

    std::vector<uint64_t> radix;
    std::vector<std::size_t> offset;
    for (const auto& d : data) {
        offset.push_back(radix.size());
        radix.insert(radix.end(), d.invariants.begin(), d.invariants.end());
    }
    std::vector<std::vector<uint64_t>> gimg(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (const auto& d : data)
            gimg[gi].insert(gimg[gi].end(), d.gencoords[gi].begin(),
                            d.gencoords[gi].end());

    // Subgroup closure of the generator images in the product group.
    std::set<std::vector<uint64_t>> closure;
    std::vector<std::vector<uint64_t>> stack;
    closure.insert(std::vector<uint64_t>(radix.size(), 0));
    stack.push_back(std::vector<uint64_t>(radix.size(), 0));
    while (!stack.empty()) {
        std::vector<uint64_t> cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& g : gimg) {
            std::vector<uint64_t> nxt(radix.size());
            for (std::size_t i = 0; i < radix.size(); ++i)
                nxt[i] = (cur[i] + g[i]) % radix[i];
            if (closure.insert(nxt).second) {
                if (closure.size() > image_budget)
                    throw ImageBudgetExceeded(
                        "the image subgroup exceeds the budget of " +
                        std::to_string(image_budget));
                stack.push_back(std::move(nxt));
            }
        }
    }

    SieveCertificate cert;
    cert.mode = "poonen";
    std::vector<std::vector<uint64_t>> alive(closure.begin(), closure.end());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const PrimeData& d = data[i];
        std::size_t off = offset[i], k = d.invariants.size();
        std::vector<std::vector<uint64_t>> next;
        for (auto& e : alive) {
            std::vector<uint64_t> slice(e.begin() + off, e.begin() + off + k);
            if (std::binary_search(d.W.begin(), d.W.end(), slice))
                next.push_back(std::move(e));
        }
        alive = std::move(next);

        PerPrimeReport rep;
        rep.p = d.p;
        rep.group_order = d.order;
        rep.invariants = d.invariants;
        rep.curve_points = d.curve_points;
        rep.target_classes = d.W;
        rep.survivors_after = alive.size();
        cert.per_prime.push_back(std::move(rep));
        if (alive.empty()) break;
    }

    cert.survivors = std::move(alive);
    cert.outcome = cert.survivors.empty() ? "EMPTY" : "SURVIVORS";
    cert.assumptions = prob.subgroup.assumption_note;
    cert.problem = std::move(prob);
    finalize_digest(cert);
    return cert;
}

SieveCertificate replay_certificate(const SieveCertificate& cert) {
    if (cert.mode == "sieve") return sieve_run(cert.problem);
    if (cert.mode == "poonen") return poonen_run(cert.problem);
    throw ParseError("unknown certificate mode: " + cert.mode);
}

namespace {

json rat_vec_json(const std::vector<BigRat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::vector<BigRat> rat_vec_from(const json& a) {
    std::vector<BigRat> out;
    for (const auto& x : a) out.push_back(parse_rat(x.get<std::string>()));
    return out;
}

const char* kind_name(RationalPoint::Kind k) {
    switch (k) {
        case RationalPoint::Affine: return "affine";
        case RationalPoint::InfOdd: return "infinity";
        case RationalPoint::InfPlus: return "infinity_plus";
        case RationalPoint::InfMinus: return "infinity_minus";
    }
    return "affine";
}

RationalPoint::Kind kind_from_name(const std::string& s) {
    if (s == "affine") return RationalPoint::Affine;
    if (s == "infinity") return RationalPoint::InfOdd;
    if (s == "infinity_plus") return RationalPoint::InfPlus;
    if (s == "infinity_minus") return RationalPoint::InfMinus;
    throw ParseError("unknown point kind: " + s);
}

json fp_point_json(const CurvePointFp& P) {
    json j;
    switch (P.kind) {
        case CurvePointFp::Affine:
            j["kind"] = "affine";
            j["x"] = P.x;
            j["y"] = P.y;
            break;
        case CurvePointFp::InfOdd: j["kind"] = "infinity"; break;
        case CurvePointFp::InfPlus: j["kind"] = "infinity_plus"; break;
        case CurvePointFp::InfMinus: j["kind"] = "infinity_minus"; break;
    }
    return j;
}

CurvePointFp fp_point_from(const json& j) {
    CurvePointFp P;
    std::string kind = j.value("kind", "affine");
    if (kind == "affine") {
        P.kind = CurvePointFp::Affine;
        P.x = j.at("x").get<uint32_t>();
        P.y = j.at("y").get<uint32_t>();
    } else if (kind == "infinity") {
        P.kind = CurvePointFp::InfOdd;
    } else if (kind == "infinity_plus") {
        P.kind = CurvePointFp::InfPlus;
    } else if (kind == "infinity_minus") {
        P.kind = CurvePointFp::InfMinus;
    } else {
        throw ParseError("unknown point kind: " + kind);
    }
    return P;
}

json generator_json(const SubgroupGenerator& g) {
    json j;
    if (g.point) j["point"] = json::parse(point_to_json_string(*g.point));
    if (g.divisor) {
        json d;
        d["u"] = rat_vec_json(g.divisor->u.c);
        d["v"] = rat_vec_json(g.divisor->v.c);
        j["divisor"] = d;
    }
    return j;
}

SubgroupGenerator generator_from(const json& j) {
    SubgroupGenerator g;
    if (j.contains("point"))
        g.point = point_from_json_string(j.at("point").dump());
    if (j.contains("divisor")) {
        const json& d = j.at("divisor");
        QQCtx K;
        g.divisor = MumfordQ{RatPoly(K, rat_vec_from(d.at("u"))),
                             RatPoly(K, rat_vec_from(d.at("v")))};
    }
    if (g.point.has_value() == g.divisor.has_value())
        throw ParseError(
            "a generator is a point or a Mumford divisor, exactly one");
    return g;
}

json problem_json(const SieveProblem& prob) {
    json j;
    j["curve"] = json::parse(curve_to_json_string(prob.curve));
    if (prob.target)
        j["target"] = json::parse(curve_to_json_string(*prob.target));
    if (prob.morphism) {
        const MorphismSpec& m = *prob.morphism;
        json mj;
        mj["x_num"] = rat_vec_json(m.x_num.c);
        mj["x_den"] = rat_vec_json(m.x_den.c);
        mj["y_num"] = rat_vec_json(m.y_num.c);
        mj["y_den"] = rat_vec_json(m.y_den.c);
        json ex = json::array();
        for (const auto& e : m.exceptional_images) {
            json s;
            s["kind"] = kind_name(e.kind);
            if (e.kind == RationalPoint::Affine) s["x"] = to_string(e.x);
            json entry;
            entry["source"] = s;
            entry["image"] = json::parse(point_to_json_string(e.image));
            ex.push_back(entry);
        }
        mj["exceptional"] = ex;
        j["morphism"] = mj;
    }
    json sub;
    sub["assumption"] = prob.subgroup.assumption_note;
    json fr = json::array();
    for (const auto& g : prob.subgroup.free_generators)
        fr.push_back(generator_json(g));
    sub["free"] = fr;
    json to = json::array();
    for (const auto& [g, o] : prob.subgroup.torsion_generators) {
        json t;
        t["generator"] = generator_json(g);
        t["order"] = o;
        to.push_back(t);
    }
    sub["torsion"] = to;
    j["subgroup"] = sub;
    j["N"] = prob.modulus;
    j["S"] = prob.primes;
    json cond;
    cond["affine_only"] = prob.conditions.affine_only;
    json cpp = json::array();
    for (const auto& e : prob.conditions.per_prime) {
        json ce;
        ce["p"] = e.p;
        if (e.points) {
            json pts = json::array();
            for (const auto& P : *e.points) pts.push_back(fp_point_json(P));
            ce["points"] = pts;
        }
        if (e.x_residues) ce["x"] = *e.x_residues;
        cpp.push_back(ce);
    }
    cond["per_prime"] = cpp;
    j["conditions"] = cond;
    return j;
}

SieveProblem problem_from(const json& j) {
    SieveProblem prob{curve_from_json_string(j.at("curve").dump()),
                      std::nullopt,
                      std::nullopt,
                      {},
                      1,
                      {},
                      {}};
    if (j.contains("target"))
        prob.target = curve_from_json_string(j.at("target").dump());
    if (j.contains("morphism")) {
        const json& mj = j.at("morphism");
        QQCtx K;
        MorphismSpec m;
        m.x_num = RatPoly(K, rat_vec_from(mj.at("x_num")));
        m.x_den = RatPoly(K, rat_vec_from(mj.at("x_den")));
        m.y_num = RatPoly(K, rat_vec_from(mj.at("y_num")));
        m.y_den = RatPoly(K, rat_vec_from(mj.at("y_den")));
        for (const auto& entry : mj.value("exceptional", json::array())) {
            MorphismSpec::Exceptional e;
            const json& s = entry.at("source");
            e.kind = kind_from_name(s.value("kind", "affine"));
            if (e.kind == RationalPoint::Affine)
                e.x = parse_rat(s.at("x").get<std::string>());
            e.image = point_from_json_string(entry.at("image").dump());
            m.exceptional_images.push_back(std::move(e));
        }
        prob.morphism = std::move(m);
    }
    const json& sub = j.at("subgroup");
    prob.subgroup.assumption_note = sub.value("assumption", "");
    for (const auto& g : sub.value("free", json::array()))
        prob.subgroup.free_generators.push_back(generator_from(g));
    for (const auto& t : sub.value("torsion", json::array()))
        prob.subgroup.torsion_generators.emplace_back(
            generator_from(t.at("generator")), t.at("order").get<uint64_t>());
    prob.modulus = j.at("N").get<uint64_t>();
    prob.primes = j.at("S").get<std::vector<uint32_t>>();
    if (j.contains("conditions")) {
        const json& cj = j.at("conditions");
        prob.conditions.affine_only = cj.value("affine_only", false);
        for (const auto& ce : cj.value("per_prime", json::array())) {
            LocalConditions::PerPrime e;
            e.p = ce.at("p").get<uint32_t>();
            if (ce.contains("points")) {
                std::vector<CurvePointFp> pts;
                for (const auto& pj : ce.at("points"))
                    pts.push_back(fp_point_from(pj));
                e.points = std::move(pts);
            }
            if (ce.contains("x"))
                e.x_residues = ce.at("x").get<std::vector<uint32_t>>();
            prob.conditions.per_prime.push_back(std::move(e));
        }
    }
    return prob;
}

json report_json(const PerPrimeReport& r) {
    json j;
    j["curve_points"] = r.curve_points;
    json g;
    g["invariants"] = r.invariants;
    g["order"] = r.group_order;
    j["group"] = g;
    j["p"] = r.p;
    j["survivors_after"] = r.survivors_after;
    j["surviving"] = r.surviving;
    j["target_classes"] = r.target_classes;
    return j;
}

PerPrimeReport report_from(const json& j) {
    PerPrimeReport r;
    r.p = j.at("p").get<uint32_t>();
    r.curve_points = j.at("curve_points").get<uint64_t>();
    r.group_order = j.at("group").at("order").get<uint64_t>();
    r.invariants = j.at("group").at("invariants").get<std::vector<uint64_t>>();
    r.survivors_after = j.at("survivors_after").get<uint64_t>();
    r.surviving =
        j.at("surviving").get<std::vector<std::vector<uint64_t>>>();
    r.target_classes =
        j.at("target_classes").get<std::vector<std::vector<uint64_t>>>();
    return r;
}

json certificate_json(const SieveCertificate& cert, bool with_digest) {
    json j;
    j["assumptions"] = cert.assumptions;
    if (with_digest) j["digest"] = cert.digest;
    j["mode"] = cert.mode;
    j["outcome"] = cert.outcome;
    json params;
    params["N"] = cert.problem.modulus;
    params["S"] = cert.problem.primes;
    j["parameters"] = params;
    json pp = json::array();
    for (const auto& r : cert.per_prime) pp.push_back(report_json(r));
    j["per_prime"] = pp;
    j["problem"] = problem_json(cert.problem);
    j["survivors"] = cert.survivors;
    return j;
}

void finalize_digest(SieveCertificate& cert) {
    cert.digest = format_digest(fnv1a64(certificate_json(cert, false).dump()));
}

} // namespace

std::string sieve_problem_to_json_string(const SieveProblem& prob) {
    return problem_json(prob).dump(2);
}

SieveProblem sieve_problem_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return problem_from(j);
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed sieve problem: ") + e.what());
    }
}

std::string certificate_to_json_string(const SieveCertificate& cert) {
    return certificate_json(cert, true).dump(2);
}

SieveCertificate certificate_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        SieveCertificate cert;
        cert.mode = j.at("mode").get<std::string>();
        cert.outcome = j.at("outcome").get<std::string>();
        cert.survivors =
            j.at("survivors").get<std::vector<std::vector<uint64_t>>>();
        for (const auto& r : j.at("per_prime"))
            cert.per_prime.push_back(report_from(r));
        cert.assumptions = j.at("assumptions").get<std::string>();
        cert.problem = problem_from(j.at("problem"));
        cert.digest = j.at("digest").get<std::string>();
        return cert;
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace descent
