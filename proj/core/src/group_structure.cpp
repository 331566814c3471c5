#include "descent/group_structure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "descent/primes.hpp"

namespace descent {

EcCurveQ ec_from_cubic(const HyperellipticCurve& c) {
    if (c.degree() != 3)
        throw DegreeOutOfRange("elliptic view needs a degree-3 model");
    BigRat l(c.F[3]);
    return {QQCtx{}, BigRat(c.F[2]), BigRat(c.F[1]) * l, BigRat(c.F[0]) * l * l};
}

EcPointQ ec_lift_point(const HyperellipticCurve& c, const RationalPoint& pt) {
    if (c.degree() != 3)
        throw DegreeOutOfRange("elliptic view needs a degree-3 model");
    if (pt.kind != RationalPoint::Affine) return {};
    BigRat l(c.F[3]);
    return {false, l * pt.x, l * BigRat(c.scale) * pt.y};
}

EcCurveFp ec_reduce_curve(const EcCurveQ& e, uint32_t p) {
    FpCtx K(p);
    auto red = [&](const BigRat& a) {
        auto r = mod_p(a, p);
        if (!r) throw BadReductionDenominator("curve coefficient denominator");
        return *r;
    };
    return {K, red(e.a2), red(e.a4), red(e.a6)};
}

EcPointFp ec_reduce_point(const EcPointQ& pt, uint32_t p) {
    if (pt.infinity) return {};
    if (mpz_divisible_ui_p(pt.x.get_den().get_mpz_t(), p)) return {};
    auto x = mod_p(pt.x, p), y = mod_p(pt.y, p);
    if (!x || !y)
        throw BadReductionDenominator(
            "point with p-integral x but non-integral y");
    return {false, *x, *y};
}

std::vector<EcPointFp> ec_points(const EcCurveFp& e) {
    const Fp& F = e.K.F;
    uint32_t p = F.modulus();
    std::vector<EcPointFp> affine;
    for (uint32_t x = 0; x < p; ++x) {
        uint32_t rhs =
            F.add(F.mul(F.add(F.mul(F.add(x, e.a2), x), e.a4), x), e.a6);
        if (rhs == 0) {
            affine.push_back({false, x, 0});
        } else if (F.legendre(rhs) == 1) {
            uint32_t r = *F.sqrt(rhs);
            affine.push_back({false, x, std::min(r, p - r)});
            affine.push_back({false, x, std::max(r, p - r)});
        }
    }
    std::vector<EcPointFp> out;
    out.reserve(affine.size() + 1);
    out.push_back({});
    out.insert(out.end(), affine.begin(), affine.end());
    return out;
}

namespace {

size_t table_scalar(const std::function<size_t(size_t, size_t)>& add,
                    size_t g, uint64_t n) {
    size_t acc = 0, base = g;
    while (n > 0) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

} // namespace

AbelianGroupStructure group_structure_from_table(
    size_t n, const std::function<size_t(size_t, size_t)>& add) {
    AbelianGroupStructure s;
    s.order = n;
    if (n == 1) {
        s.dlog = {{}};
        return s;
    }
    auto factors = factor_u64(n);
    auto elem_order = [&](size_t e) {
        uint64_t t = n;
        for (auto [q, k] : factors) {
            (void)k;
            while (t % q == 0 && table_scalar(add, e, t / q) == 0) t /= q;
        }
        return t;
    };

    // The element of largest order realizes the exponent (abelian); ties
    // break to the first element in canonical order for determinism.
    uint64_t exponent = 1;
    size_t g = 0;
    for (size_t e = 0; e < n; ++e) {
        uint64_t o = elem_order(e);
        if (o > exponent) {
            exponent = o;
            g = e;
        }
    }

    // Discrete log within <g>.
    std::vector<uint64_t> hdlog(n, UINT64_MAX);
    {
        size_t acc = 0;
        for (uint64_t j = 0; j < exponent; ++j) {
            hdlog[acc] = j;
            acc = add(acc, g);
        }
    }

    // Cosets of <g>, represented by their smallest element.
    constexpr size_t kUnset = SIZE_MAX;
    std::vector<size_t> coset_id(n, kUnset);
    std::vector<size_t> reps;
    for (size_t e = 0; e < n; ++e) {
        if (coset_id[e] != kUnset) continue;
        size_t id = reps.size();
        reps.push_back(e);
        size_t acc = e;
        do {
            coset_id[acc] = id;
            acc = add(acc, g);
        } while (acc != e);
    }

    auto quotient_add = [&](size_t a, size_t b) {
        return coset_id[add(reps[a], reps[b])];
    };
    AbelianGroupStructure Q =
        group_structure_from_table(reps.size(), quotient_add);

    // Lift each quotient generator h to an element of the same order:
    // with q h = m g, q | m always (q divides the exponent), and
    // h' = h - (m/q) g kills the <g> component.
    std::vector<size_t> lifted;
    for (size_t i = 0; i < Q.generators.size(); ++i) {
        uint64_t q = Q.invariant_factors[i];
        size_t h = reps[Q.generators[i]];
        uint64_t m = hdlog[table_scalar(add, h, q)];
        if (m % q != 0)
            throw Error("group structure recovery: lift divisibility failed");
        size_t adjust = table_scalar(add, g, (exponent - m / q) % exponent);
        lifted.push_back(add(h, adjust));
    }

    s.invariant_factors = Q.invariant_factors;
    s.invariant_factors.push_back(exponent);
    s.generators = lifted;
    s.generators.push_back(g);

    s.dlog.assign(n, {});
    for (size_t e = 0; e < n; ++e) {
        std::vector<uint64_t> coords = Q.dlog[coset_id[e]];
        size_t y = e;
        for (size_t i = 0; i < lifted.size(); ++i) {
            uint64_t d = Q.invariant_factors[i];
            y = add(y, table_scalar(add, lifted[i], (d - coords[i]) % d));
        }
        coords.push_back(hdlog[y]);
        s.dlog[e] = std::move(coords);
    }
    return s;
}

namespace {

void check_good_odd(const HyperellipticCurve& c, uint32_t p) {
    if (!is_good_prime(c, p))
        throw BadReductionPrime("p = " + std::to_string(p) +
                                " is not an odd good prime");
}

} // namespace

std::vector<MumfordFp> jac_elements(const HyperellipticCurve& c, uint32_t p) {
    if (c.degree() != 5)
        throw EvenModelUnsupported(
            "Jacobian enumeration is implemented for quintic models only");
    check_good_odd(c, p);
    FpCtx K(p);
    const Fp& F = K.F;
    FpPoly fp = curve_poly_fp(c, p);

    std::vector<MumfordFp> out;
    out.push_back(mumford_identity(K));

    for (const auto& pt : points_over_fp(c, p)) {
        if (pt.kind != CurvePointFp::Affine) continue;
        out.push_back({poly_linear(K, pt.x), poly_const(K, pt.y)});
    }

    // Degree-2 pairs: v^2 = f mod u linearizes to two coefficient
    // conditions once x^2 is rewritten as -u1 x - u0.
    std::vector<MumfordFp> deg2;
    for (uint32_t u1 = 0; u1 < p; ++u1) {
        for (uint32_t u0 = 0; u0 < p; ++u0) {
            FpPoly u(K, {u0, u1, 1});
            FpPoly r = poly_mod(fp, u);
            uint32_t r0 = r.coeff(0), r1 = r.coeff(1);
            for (uint32_t v1 = 1; v1 < p; ++v1) {
                uint32_t v1sq = F.mul(v1, v1);
                uint32_t v0 =
                    F.div(F.add(r1, F.mul(v1sq, u1)), F.mul(2 % p, v1));
                if (F.sub(F.mul(v0, v0), F.mul(v1sq, u0)) == r0)
                    deg2.push_back({u, FpPoly(K, {v0, v1})});
            }
            if (r1 == 0) {
                if (r0 == 0) {
                    deg2.push_back({u, poly_zero(K)});
                } else if (F.legendre(r0) == 1) {
                    uint32_t v0 = *F.sqrt(r0);
                    deg2.push_back({u, poly_const(K, v0)});
                    deg2.push_back({u, poly_const(K, F.neg(v0))});
                }
            }
        }
    }
    std::sort(out.begin() + 1, out.end(), MumfordLess{});
    std::sort(deg2.begin(), deg2.end(), MumfordLess{});
    out.insert(out.end(), deg2.begin(), deg2.end());
    return out;
}

uint64_t jac_order_fp(const HyperellipticCurve& c, uint32_t p) {
    check_good_odd(c, p);
    uint64_t n1 = points_over_fp(c, p).size();
    if (c.genus() == 1) return n1;
    uint64_t n2 = count_points_fp2(c, p);
    return (n1 * n1 + n2) / 2 - p;
}

AbelianGroupStructure ec_group_structure(const HyperellipticCurve& c,
                                         uint32_t p) {
    if (c.degree() != 3)
        throw DegreeOutOfRange("elliptic structure needs a degree-3 model");
    check_good_odd(c, p);
    EcCurveFp E = ec_reduce_curve(ec_from_cubic(c), p);
    std::vector<EcPointFp> pts = ec_points(E);
    // Affine points are sorted by (x, y) after the identity.
    auto index_of = [&](const EcPointFp& q) -> size_t {
        if (q.infinity) return 0;
        auto it = std::lower_bound(
            pts.begin() + 1, pts.end(), q,
            [](const EcPointFp& a, const EcPointFp& b) {
                return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
            });
        return static_cast<size_t>(it - pts.begin());
    };
    auto add = [&](size_t i, size_t j) {
        return index_of(ec_add(E, pts[i], pts[j]));
    };
    return group_structure_from_table(pts.size(), add);
}

AbelianGroupStructure jac_group_structure(const HyperellipticCurve& c,
                                          uint32_t p, uint32_t max_p) {
    if (p > max_p)
        throw EnumerationBudgetExceeded(
            "p = " + std::to_string(p) + " exceeds the enumeration budget " +
            std::to_string(max_p));
    std::vector<MumfordFp> els = jac_elements(c, p);
    if (els.size() != jac_order_fp(c, p))
        throw Error("Jacobian enumeration disagrees with the point-count "
                    "order formula");
    FpPoly fp = curve_poly_fp(c, p);
    std::map<MumfordFp, size_t, MumfordLess> index;
    for (size_t i = 0; i < els.size(); ++i) index[els[i]] = i;
    auto add = [&](size_t i, size_t j) {
        return index.at(cantor_add(fp, els[i], els[j]));
    };
    return group_structure_from_table(els.size(), add);
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::string, uint32_t>, AbelianGroupStructure>
    structure_cache;

std::string curve_cache_key(const HyperellipticCurve& c) {
    std::ostringstream os;
    for (const auto& a : c.F) os << a << ",";
    return os.str();
}

} // namespace

const AbelianGroupStructure& jac_group_structure_cached(
    const HyperellipticCurve& c, uint32_t p, uint32_t max_p) {
    auto key = std::make_pair(curve_cache_key(c), p);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = structure_cache.find(key);
    if (it == structure_cache.end())
        it = structure_cache.emplace(key, jac_group_structure(c, p, max_p))
                 .first;
    return it->second;
}

void clear_structure_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    structure_cache.clear();
}

} // namespace descent
