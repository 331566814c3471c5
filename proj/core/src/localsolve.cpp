#include "descent/localsolve.hpp"

#include <algorithm>

#include "descent/fp.hpp"
#include "descent/primes.hpp"

namespace descent {

namespace {

struct ChartPoly {
    Chart chart;
    std::vector<BigInt> F;
    int start_depth;  // 0 for the direct chart (all of Z_p), 1 for t in p Z_p
};

BigInt eval_int(const std::vector<BigInt>& F, const BigInt& x) {
    BigInt r = 0;
    for (std::size_t i = F.size(); i-- > 0;) r = r * x + F[i];
    return r;
}

std::vector<BigInt> derivative_int(const std::vector<BigInt>& F) {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < F.size(); ++i) d.push_back(F[i] * static_cast<long>(i));
    return d;
}

struct Solver {
    uint32_t p;
    int cap;
    std::vector<DecidedClass> refutation;
    std::optional<QpWitness> witness;

    /// Units of Q_p that are squares: even valuation and, for odd p, a
    /// quadratic residue unit; for p = 2, unit = 1 mod 8.
    bool unit_is_square(const BigInt& unit) const {
        if (p == 2) return mod_p(unit, 8) == 1;
        return Fp(p).legendre(mod_p(unit, p)) == 1;
    }

    /// Depth-first split of the class rep mod p^depth; returns true when a
    /// solvable class was found (search stops there).
    bool split(const ChartPoly& chart, const BigInt& rep, int depth,
               const BigInt& pk) {
        const auto& F = chart.F;
        BigInt val = eval_int(F, rep);
        if (val == 0) {
            witness = QpWitness{chart.chart, rep, depth};
            return true;
        }
        long w = valuation(val, p);
        long decide_margin = (p == 2) ? 3 : 1;
        if (w <= depth - decide_margin) {
            BigInt unit = val / pow_int(p, w);
            bool ok = (w % 2 == 0) && unit_is_square(unit);
            refutation.push_back({chart.chart, rep, depth, w, ok});
            if (ok) witness = QpWitness{chart.chart, rep, depth};
            return ok;
        }
        BigInt dval = eval_int(derivative_int(F), rep);
        if (dval != 0) {
            long s = valuation(dval, p);
            if (w > 2 * s) {
                // Hensel: a root of F converges from rep, giving a point
                // with y = 0 (or a nearby square value).
                witness = QpWitness{chart.chart, rep, depth};
                return true;
            }
        }
        if (depth >= cap)
            throw DepthExceeded("undecided class at depth cap " +
                                std::to_string(cap) + " (p = " +
                                std::to_string(p) + ")");
        BigInt child = rep;
        for (uint32_t j = 0; j < p; ++j) {
            if (split(chart, child, depth + 1, pk * p)) return true;
            child += pk;
        }
        return false;
    }

    static BigInt pow_int(uint32_t p, long e) {
        BigInt r = 1;
        for (long i = 0; i < e; ++i) r *= p;
        return r;
    }
};

} // namespace

bool has_real_points(const HyperellipticCurve& c) {
    auto rep = real_locus(c);
    return rep.has_real_infinity || !rep.intervals.empty();
}

LocalVerdict real_verdict(const HyperellipticCurve& c) {
    LocalVerdict v;
    v.is_real_place = true;
    auto rep = real_locus(c);
    v.solvable = rep.has_real_infinity || !rep.intervals.empty();
    if (!rep.intervals.empty()) v.real_interval = rep.intervals.front();
    return v;
}

LocalVerdict has_qp_points(const HyperellipticCurve& c, uint32_t p) {
    LocalVerdict verdict;
    verdict.p = p;

    long vdisc = valuation(c.disc, p);
    Solver solver;
    solver.p = p;
    solver.cap = static_cast<int>(vdisc + (p == 2 ? 2 : 0) + 4);

    int n = 2 * c.genus() + 2;
    RatPoly f{QQCtx{}, c.f};
    RatPoly fstar = poly_reverse_padded(f, n);
    // The reciprocal-chart integral model uses the same y-scaling.
    std::vector<BigInt> Fstar(n + 1, BigInt(0));
    {
        BigInt d2 = c.scale * c.scale;
        for (std::size_t i = 0; i < fstar.c.size(); ++i)
            Fstar[i] = BigRat(fstar.c[i] * BigRat(d2)).get_num();
        while (!Fstar.empty() && Fstar.back() == 0) Fstar.pop_back();
    }

    ChartPoly direct{Chart::Direct, c.F, 0};
    ChartPoly reciprocal{Chart::Reciprocal, Fstar, 1};

    for (const ChartPoly& chart : {direct, reciprocal}) {
        bool found;
        if (chart.start_depth == 0) {
            found = solver.split(chart, BigInt(0), 0, BigInt(1));
        } else {
            found = solver.split(chart, BigInt(0), 1, BigInt(p));
        }
        if (found) {
            verdict.solvable = true;
            verdict.witness = solver.witness;
            verdict.refutation.clear();
            return verdict;
        }
    }
    verdict.solvable = false;
    verdict.refutation = std::move(solver.refutation);
    return verdict;
}

std::pair<bool, std::vector<LocalVerdict>> is_els(const HyperellipticCurve& c) {
    std::vector<LocalVerdict> verdicts;
    LocalVerdict real = real_verdict(c);
    verdicts.push_back(real);
    if (!real.solvable) return {false, std::move(verdicts)};

    std::vector<uint32_t> critical = c.bad_primes;
    if (c.genus() == 2)
        for (uint32_t p : good_primes(c, 13)) critical.push_back(p);
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()),
                   critical.end());

    for (uint32_t p : critical) {
        LocalVerdict v = has_qp_points(c, p);
        bool ok = v.solvable;
        verdicts.push_back(std::move(v));
        if (!ok) return {false, std::move(verdicts)};
    }
    return {true, std::move(verdicts)};
}

} // namespace descent
