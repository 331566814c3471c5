#include "descent/poly.hpp"

namespace descent {

namespace {

int poly_deg(const std::vector<BigInt>& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[d] == 0) --d;
    return d;
}

/// Fraction-free Gaussian elimination (Bareiss); exact over the integers.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

BigInt resultant_int(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    int da = poly_deg(a), db = poly_deg(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0 && db == 0) return 1;
    const std::size_t n = da + db;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    // Sylvester matrix: db rows of a's coefficients, da rows of b's,
    // highest degree first.
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];
    return bareiss_det(std::move(m));
}

FpPoly poly_reduce(const std::vector<BigInt>& a, uint32_t p) {
    FpPoly r((FpCtx(p)));
    r.c.reserve(a.size());
    for (const auto& z : a) r.c.push_back(mod_p(z, p));
    r.trim();
    return r;
}

FpPoly poly_reduce(const std::vector<BigRat>& a, uint32_t p) {
    FpPoly r((FpCtx(p)));
    r.c.reserve(a.size());
    for (const auto& q : a) {
        auto v = mod_p(q, p);
        if (!v)
            throw BadReductionDenominator(
                "coefficient denominator divisible by " + std::to_string(p));
        r.c.push_back(*v);
    }
    r.trim();
    return r;
}

} // namespace descent
