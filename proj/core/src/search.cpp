#include "descent/search.hpp"

#include <algorithm>
#include <numeric>

#include "descent/errors.hpp"

namespace descent {

namespace {

bool passes_filter(const HyperellipticCurve& c, const LocalConditions& lc,
                   const RationalPoint& P) {
    if (lc.affine_only && P.kind != RationalPoint::Affine) return false;
    for (const auto& e : lc.per_prime) {
        CurvePointFp red = reduce_rational_point(c, P, e.p);
        if (e.points) {
            if (std::find(e.points->begin(), e.points->end(), red) ==
                e.points->end())
                return false;
        } else if (e.x_residues) {
            if (red.kind != CurvePointFp::Affine) return false;
            if (std::find(e.x_residues->begin(), e.x_residues->end(), red.x) ==
                e.x_residues->end())
                return false;
        }
    }
    return true;
}

} // namespace

std::vector<RationalPoint> point_search(const HyperellipticCurve& c,
                                        uint32_t H,
                                        const LocalConditions* filter) {
    if (H < 1) throw Error("the height bound must be at least 1");
    const int n = c.degree();
    std::vector<RationalPoint> out;

    if (c.odd_degree_model()) {
        out.push_back({RationalPoint::InfOdd, BigRat(), BigRat()});
    } else if (rat_is_square(c.leading())) {
        out.push_back({RationalPoint::InfPlus, BigRat(), BigRat()});
        out.push_back({RationalPoint::InfMinus, BigRat(), BigRat()});
    }

    const long h = static_cast<long>(H);
    for (long b = 1; b <= h; ++b) {
        std::vector<BigInt> bpow(static_cast<std::size_t>(n) + 1);
        bpow[0] = 1;
        for (int k = 1; k <= n; ++k) bpow[k] = bpow[k - 1] * b;
        for (long a = -h; a <= h; ++a) {
            if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
            // A = sum_i F_i a^i b^(n-i), so that y^2 = A / (scale^2 b^n).
            BigInt A(0);
            for (int i = n; i >= 0; --i) A = A * a + c.F[i] * bpow[n - i];
            BigInt square = n % 2 == 0 ? A : A * b;
            BigInt root;
            if (square < 0 || !is_perfect_square(square, &root)) continue;
            BigRat x{BigInt(a), BigInt(b)};
            x.canonicalize();
            BigRat y{root, BigInt(c.scale * bpow[(n + 1) / 2])};
            y.canonicalize();
            out.push_back({RationalPoint::Affine, x, y});
            if (!(y == 0)) out.push_back({RationalPoint::Affine, x, -y});
        }
    }

    if (filter) {
        std::vector<RationalPoint> kept;
        for (const auto& P : out)
            if (passes_filter(c, *filter, P)) kept.push_back(P);
        out = std::move(kept);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace descent
