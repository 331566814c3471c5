#include "descent/real_locus.hpp"

#include <algorithm>

namespace descent {

namespace {

int sign_of(const BigRat& q) { return sgn(q); }

/// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain;
    chain.push_back(f);
    chain.push_back(poly_derivative(f));
    while (!chain.back().is_zero() && chain.back().deg() > 0) {
        RatPoly r = poly_mod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(poly_neg(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    int var = 0, last = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

/// Number of roots in (a, b], endpoints assumed non-roots of f.
int roots_between(const std::vector<RatPoly>& chain, const BigRat& a,
                  const BigRat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

struct Isolator {
    const RatPoly& f;
    const std::vector<RatPoly>& chain;
    BigRat width_goal;
    std::vector<std::pair<BigRat, BigRat>> brackets;

    /// Interval (a, b] known to contain n roots, f(a), f(b) != 0.
    void isolate(const BigRat& a, const BigRat& b, int n) {
        if (n == 0) return;
        if (n == 1 && sign_of(f.eval(a)) != sign_of(f.eval(b))) {
            refine(a, b);
            return;
        }
        BigRat m = (a + b) / 2;
        if (f.eval(m) == 0) {
            // Rational root exactly at the midpoint: carve out a bracket
            // around it, shrinking eps until the bracket straddles and the
            // outer pieces account for the remaining roots.
            BigRat eps = width_goal / 4;
            for (;;) {
                BigRat lo = m - eps, hi = m + eps;
                if (f.eval(lo) != 0 && f.eval(hi) != 0 &&
                    sign_of(f.eval(lo)) != sign_of(f.eval(hi)) &&
                    roots_between(chain, lo, hi) == 1) {
                    brackets.push_back({lo, hi});
                    isolate(a, lo, roots_between(chain, a, lo));
                    isolate(hi, b, roots_between(chain, hi, b));
                    return;
                }
                eps /= 2;
            }
        }
        int left = roots_between(chain, a, m);
        isolate(a, m, left);
        isolate(m, b, n - left);
    }

    /// Bisect [a, b] with a sign change down to the width goal.
    void refine(BigRat a, BigRat b) {
        int sa = sign_of(f.eval(a));
        while (b - a > width_goal) {
            BigRat m = (a + b) / 2;
            int sm = sign_of(f.eval(m));
            if (sm == 0) {
                BigRat eps = (b - a) / 8;
                for (;;) {
                    BigRat lo = m - eps, hi = m + eps;
                    if (lo > a && hi < b && f.eval(lo) != 0 &&
                        f.eval(hi) != 0 &&
                        sign_of(f.eval(lo)) != sign_of(f.eval(hi))) {
                        a = lo;
                        b = hi;
                        break;
                    }
                    eps /= 2;
                }
                if (b - a <= width_goal) break;
                sa = sign_of(f.eval(a));
                continue;
            }
            if (sm == sa)
                a = m;
            else
                b = m;
        }
        brackets.push_back({a, b});
    }
};

} // namespace

std::vector<std::pair<BigRat, BigRat>> real_roots(const std::vector<BigRat>& f) {
    RatPoly p{QQCtx{}, f};
    if (p.deg() < 1) return {};
    auto chain = sturm_chain(p);
    // Cauchy bound: all real roots lie in (-M, M).
    BigRat M(1);
    for (int i = 0; i < p.deg(); ++i) {
        BigRat q = abs(p.c[i] / p.lc());
        if (q > M) M = q;
    }
    M += 1;
    while (p.eval(-M) == 0 || p.eval(M) == 0) M += 1;
    BigRat width_goal(BigInt(1), BigInt(1) << 32);
    Isolator iso{p, chain, width_goal, {}};
    iso.isolate(-M, M, roots_between(chain, -M, M));
    std::sort(iso.brackets.begin(), iso.brackets.end());
    return iso.brackets;
}

RealLocusReport real_locus(const HyperellipticCurve& c) {
    RealLocusReport rep;
    rep.has_real_infinity = c.odd_degree_model() || c.leading() > 0;
    RatPoly f{QQCtx{}, c.f};
    auto roots = real_roots(c.f);

    auto endpoint_at = [&](std::size_t i) {
        RealEndpoint e;
        e.infinite = false;
        e.bracket_lo = roots[i].first;
        e.bracket_hi = roots[i].second;
        e.approx = (e.bracket_lo + e.bracket_hi) / 2;
        return e;
    };
    auto minus_inf = [] {
        RealEndpoint e;
        e.infinite = true;
        e.direction = -1;
        return e;
    };
    auto plus_inf = [] {
        RealEndpoint e;
        e.infinite = true;
        e.direction = 1;
        return e;
    };

    if (roots.empty()) {
        // No sign changes: f has constant sign.
        if (f.eval(BigRat(0)) > 0)
            rep.intervals.push_back({minus_inf(), plus_inf()});
        return rep;
    }

    // Sign of f below the smallest root.
    BigRat below = roots.front().first - 1;
    if (sign_of(f.eval(below)) > 0)
        rep.intervals.push_back({minus_inf(), endpoint_at(0)});
    // Between consecutive roots: sample strictly between the brackets.
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        BigRat s = (roots[i].second + roots[i + 1].first) / 2;
        if (sign_of(f.eval(s)) > 0)
            rep.intervals.push_back({endpoint_at(i), endpoint_at(i + 1)});
    }
    BigRat above = roots.back().second + 1;
    if (sign_of(f.eval(above)) > 0)
        rep.intervals.push_back({endpoint_at(roots.size() - 1), plus_inf()});
    return rep;
}

} // namespace descent
