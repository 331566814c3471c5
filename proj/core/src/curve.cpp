#include "descent/curve.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "descent/primes.hpp"

namespace descent {

using nlohmann::json;

HyperellipticCurve new_curve(std::vector<BigRat> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 3 || deg > 6)
        throw DegreeOutOfRange("curve degree must be in [3, 6], got " +
                               std::to_string(deg));
    HyperellipticCurve c;
    c.f = std::move(f);
    c.scale = common_denominator(c.f);
    BigInt d2 = c.scale * c.scale;
    c.F.reserve(c.f.size());
    for (const auto& q : c.f) {
        BigRat scaled = q * BigRat(d2);
        c.F.push_back(scaled.get_num());
    }
    c.disc = discriminant(c);
    if (c.disc == 0) throw NotSquarefree("curve polynomial is not squarefree");
    c.bad_primes.clear();
    BigInt support = 2 * c.F.back() * c.disc;
    for (const auto& p : prime_support(support)) {
        if (!p.fits_ulong_p())
            throw Error("bad prime exceeds the supported word size");
        unsigned long v = p.get_ui();
        if (v > 0xffffffffull)
            throw Error("bad prime exceeds the supported word size");
        c.bad_primes.push_back(static_cast<uint32_t>(v));
    }
    return c;
}

BigInt discriminant(const HyperellipticCurve& c) {
    if (c.disc != 0) return c.disc;
    std::vector<BigInt> F = c.F;
    if (F.empty()) {
        // Fresh instance being built: derive from f directly.
        BigInt d = common_denominator(c.f);
        BigInt d2 = d * d;
        for (const auto& q : c.f) F.push_back(BigRat(q * BigRat(d2)).get_num());
    }
    int n = static_cast<int>(F.size()) - 1;
    std::vector<BigInt> Fd;
    for (int i = 1; i <= n; ++i) Fd.push_back(F[i] * i);
    BigInt res = resultant_int(F, Fd);
    BigInt disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), F[n].get_mpz_t());
    int sign_exp = (n * (n - 1) / 2) % 2;
    return sign_exp ? BigInt(-disc) : disc;
}

bool is_good_prime(const HyperellipticCurve& c, uint32_t p) {
    if (p == 2) return false;
    return std::find(c.bad_primes.begin(), c.bad_primes.end(), p) ==
           c.bad_primes.end();
}

std::vector<uint32_t> good_primes(const HyperellipticCurve& c, uint32_t bound) {
    std::vector<uint32_t> out;
    for (uint32_t p : primes_up_to(bound))
        if (is_good_prime(c, p)) out.push_back(p);
    return out;
}

std::vector<CurvePointFp> points_over_fp(const HyperellipticCurve& c,
                                         uint32_t p) {
    if (!is_good_prime(c, p))
        throw BadReductionPrime("points_over_fp requires an odd good prime, got " +
                                std::to_string(p));
    Fp F(p);
    FpPoly fp = poly_reduce(c.F, p);
    std::vector<CurvePointFp> out;
    for (uint32_t x = 0; x < p; ++x) {
        uint32_t v = fp.eval(x);
        int chi = F.legendre(v);
        if (chi == 0) {
            out.push_back({CurvePointFp::Affine, x, 0});
        } else if (chi == 1) {
            uint32_t r = *F.sqrt(v);
            uint32_t a = std::min(r, p - r), b = std::max(r, p - r);
            out.push_back({CurvePointFp::Affine, x, a});
            out.push_back({CurvePointFp::Affine, x, b});
        }
    }
    if (c.odd_degree_model()) {
        out.push_back({CurvePointFp::InfOdd, 0, 0});
    } else {
        uint32_t lc = mod_p(c.F.back(), p);
        if (F.legendre(lc) == 1) {
            out.push_back({CurvePointFp::InfPlus, 0, 0});
            out.push_back({CurvePointFp::InfMinus, 0, 0});
        }
    }
    return out;
}

uint64_t count_points_fp2(const HyperellipticCurve& c, uint32_t p) {
    if (!is_good_prime(c, p))
        throw BadReductionPrime("count_points_fp2 requires an odd good prime");
    Fp2 F2(p);
    FpPoly fp = poly_reduce(c.F, p);
    uint64_t count = 0;
    for (uint32_t a = 0; a < p; ++a) {
        for (uint32_t b = 0; b < p; ++b) {
            Fp2::Elem x = F2.make(a, b);
            Fp2::Elem v = F2.make(0, 0);
            for (std::size_t i = fp.c.size(); i-- > 0;)
                v = F2.add(F2.mul(v, x), F2.make(fp.c[i], 0));
            if (F2.is_zero(v))
                count += 1;
            else
                count += 1 + F2.chi(v);
        }
    }
    count += c.odd_degree_model() ? 1 : 2;
    return count;
}

void validate_point(const HyperellipticCurve& c, const RationalPoint& pt) {
    switch (pt.kind) {
    case RationalPoint::Affine: {
        RatPoly f{QQCtx{}, c.f};
        if (pt.y * pt.y != f.eval(pt.x))
            throw PointNotOnCurve("affine point fails y^2 = f(x)");
        return;
    }
    case RationalPoint::InfOdd:
        if (!c.odd_degree_model())
            throw PointNotOnCurve("odd infinity point on an even-degree model");
        return;
    case RationalPoint::InfPlus:
    case RationalPoint::InfMinus:
        if (c.odd_degree_model())
            throw PointNotOnCurve("signed infinity point on an odd-degree model");
        if (!rat_is_square(c.leading()))
            throw PointNotOnCurve(
                "infinity points are not rational: lc(f) is not a square");
        return;
    }
    throw PointNotOnCurve("unknown point kind");
}

CurvePointFp reduce_rational_point(const HyperellipticCurve& c,
                                   const RationalPoint& pt, uint32_t p) {
    if (!is_good_prime(c, p))
        throw BadReductionPrime("point reduction requires an odd good prime");
    Fp F(p);
    switch (pt.kind) {
    case RationalPoint::InfOdd:
        return {CurvePointFp::InfOdd, 0, 0};
    case RationalPoint::InfPlus:
    case RationalPoint::InfMinus: {
        validate_point(c, pt);
        BigRat root;
        rat_is_square(c.leading(), &root);
        if (pt.kind == RationalPoint::InfMinus) root = -root;
        // The plus branch mod p is the one whose y/x^(g+1) value is the
        // canonical square root of lc.
        auto rmod = mod_p(root, p);
        if (!rmod) throw BadReductionDenominator("p divides sqrt(lc) denominator");
        uint32_t canon = *F.sqrt(mod_p(c.F.back(), p));
        // Compare against the square root of the integral-model leading
        // coefficient: the model change multiplies y by scale.
        uint32_t branch = F.mul(*rmod, mod_p(c.scale, p));
        return {branch == canon ? CurvePointFp::InfPlus : CurvePointFp::InfMinus,
                0, 0};
    }
    case RationalPoint::Affine: {
        long vx = pt.x == 0 ? 0 : valuation(pt.x, p);
        if (vx >= 0) {
            auto xr = mod_p(pt.x, p);
            // Stored points live on the integral model, so carry y along
            // with the model change.
            auto yr = mod_p(BigRat(c.scale) * pt.y, p);
            if (!xr || !yr)
                throw BadReductionDenominator(
                    "p divides a coordinate denominator");
            return {CurvePointFp::Affine, *xr, *yr};
        }
        if (c.odd_degree_model()) return {CurvePointFp::InfOdd, 0, 0};
        // x has a pole: the point lands at infinity; the branch follows
        // from s = y / x^(g+1), which is a p-unit square root of lc there.
        int gp1 = c.genus() + 1;
        BigRat xp = 1;
        for (int i = 0; i < gp1; ++i) xp *= pt.x;
        BigRat s = pt.y / xp * BigRat(c.scale);
        auto smod = mod_p(s, p);
        if (!smod) throw BadReductionDenominator("branch value not p-integral");
        uint32_t canon = *F.sqrt(mod_p(c.F.back(), p));
        return {*smod == canon ? CurvePointFp::InfPlus : CurvePointFp::InfMinus,
                0, 0};
    }
    }
    throw PointNotOnCurve("unknown point kind");
}

std::vector<BigRat> odd_model_via_root(const HyperellipticCurve& c,
                                       const BigRat& r) {
    if (c.odd_degree_model())
        throw EvenModelUnsupported(
            "odd_model_via_root expects an even-degree model");
    RatPoly f{QQCtx{}, c.f};
    if (f.eval(r) != 0)
        throw Error("odd_model_via_root: r is not a root of f");
    // Substitute x = r + 1/t, y = w / t^(g+1): w^2 = t^(2g+2) f(r + 1/t),
    // which is a polynomial of degree 2g+1 in t because f(r) = 0.
    int n = c.degree();
    QQCtx K;
    // t^n f(r + 1/t) = sum_i f_i t^(n-i) (r t + 1)^i / t^i * t^i ... expand
    // via g(u) = f(r + u) and reverse: result_j = g_{n-j}.
    std::vector<BigRat> g(c.f.size(), BigRat(0));
    {
        // Taylor shift by r via repeated Horner.
        std::vector<BigRat> work = c.f;
        for (std::size_t j = 0; j < g.size(); ++j) {
            BigRat rem = work.back();
            for (std::size_t i = work.size() - 1; i-- > 0;)
                rem = rem * r + work[i];
            g[j] = rem;
            // Divide work by (x - r): synthetic division, quotient in place.
            std::vector<BigRat> quot(work.size() - 1);
            BigRat carry = 0;
            for (std::size_t i = work.size(); i-- > 1;) {
                carry = work[i] + carry * r;
                quot[i - 1] = carry;
            }
            work = quot;
            if (work.empty()) break;
        }
    }
    std::vector<BigRat> out(n, BigRat(0));
    for (int j = 0; j < n; ++j) out[j] = g[n - j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

namespace {

json curve_to_json(const HyperellipticCurve& c) {
    json j;
    json fs = json::array();
    for (const auto& q : c.f) fs.push_back(to_string(q));
    j["f"] = fs;
    return j;
}

std::vector<BigRat> coeffs_from_json(const json& j) {
    if (!j.is_object() || !j.contains("f") || !j["f"].is_array())
        throw ParseError("curve JSON must be an object with an \"f\" array");
    std::vector<BigRat> f;
    for (const auto& e : j["f"]) {
        if (!e.is_string()) throw ParseError("curve coefficients must be strings");
        f.push_back(parse_rat(e.get<std::string>()));
    }
    return f;
}

} // namespace

std::string curve_to_json_string(const HyperellipticCurve& c) {
    return curve_to_json(c).dump();
}

HyperellipticCurve curve_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad curve JSON: ") + e.what());
    }
    return new_curve(coeffs_from_json(j));
}

std::string point_to_json_string(const RationalPoint& pt) {
    json j;
    switch (pt.kind) {
    case RationalPoint::Affine:
        j["kind"] = "affine";
        j["x"] = to_string(pt.x);
        j["y"] = to_string(pt.y);
        break;
    case RationalPoint::InfOdd:
        j["kind"] = "infinity";
        break;
    case RationalPoint::InfPlus:
        j["kind"] = "infinity_plus";
        break;
    case RationalPoint::InfMinus:
        j["kind"] = "infinity_minus";
        break;
    }
    return j.dump();
}

RationalPoint point_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad point JSON: ") + e.what());
    }
    RationalPoint pt;
    std::string kind = j.value("kind", "affine");
    if (kind == "affine") {
        pt.kind = RationalPoint::Affine;
        pt.x = parse_rat(j.at("x").get<std::string>());
        pt.y = parse_rat(j.at("y").get<std::string>());
    } else if (kind == "infinity") {
        pt.kind = RationalPoint::InfOdd;
    } else if (kind == "infinity_plus") {
        pt.kind = RationalPoint::InfPlus;
    } else if (kind == "infinity_minus") {
        pt.kind = RationalPoint::InfMinus;
    } else {
        throw ParseError("unknown point kind: " + kind);
    }
    return pt;
}

} // namespace descent
