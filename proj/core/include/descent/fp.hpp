#pragma once

#include <cassert>
#include <cstdint>
#include <optional>

#include "descent/errors.hpp"

namespace descent {

/// Arithmetic context for the prime field F_p, p an odd prime below 2^31
/// (p = 2 is permitted for plain modular arithmetic but has no square
/// roots of interest here). Elements are uint32_t values in [0, p).
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) { assert(p >= 2); }

    uint32_t modulus() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t r = 1, base = a % p_;
        while (e) {
            if (e & 1) r = r * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }
    uint32_t inv(uint32_t a) const {
        assert(a != 0);
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        assert(r == 1);
        return static_cast<uint32_t>(t < 0 ? t + p_ : t);
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    /// Legendre symbol as an int in {-1, 0, 1}; requires odd p.
    int legendre(uint32_t a) const {
        assert(p_ % 2 == 1);
        a %= p_;
        if (a == 0) return 0;
        uint32_t m = p_;
        int sign = 1;
        while (a != 0) {
            while (a % 2 == 0) {
                a /= 2;
                uint32_t r = m % 8;
                if (r == 3 || r == 5) sign = -sign;
            }
            uint32_t t = a;
            a = m;
            m = t;
            if (a % 4 == 3 && m % 4 == 3) sign = -sign;
            a %= m;
        }
        return m == 1 ? sign : 0;
    }

    /// Canonical square root in [0, p/2], when a is a square; Tonelli-Shanks
    /// for the hard case. Requires odd prime p.
    std::optional<uint32_t> sqrt(uint32_t a) const {
        assert(p_ % 2 == 1);
        a %= p_;
        if (a == 0) return 0u;
        if (legendre(a) != 1) return std::nullopt;
        uint32_t r;
        if (p_ % 4 == 3) {
            r = pow(a, (static_cast<uint64_t>(p_) + 1) / 4);
        } else {
            // p = q 2^s + 1 with q odd
            uint64_t q = p_ - 1;
            uint32_t s = 0;
            while (q % 2 == 0) {
                q /= 2;
                ++s;
            }
            uint32_t z = 2;
            while (legendre(z) != -1) ++z;
            uint32_t m = s;
            uint32_t c = pow(z, q);
            uint32_t t = pow(a, q);
            r = pow(a, (q + 1) / 2);
            while (t != 1) {
                uint32_t i = 0;
                uint32_t t2 = t;
                while (t2 != 1) {
                    t2 = mul(t2, t2);
                    ++i;
                }
                uint32_t b = c;
                for (uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
                m = i;
                c = mul(b, b);
                t = mul(t, c);
                r = mul(r, b);
            }
        }
        uint32_t other = p_ - r;
        return r <= other ? r : other;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

/// A value carrying its modulus; convenience wrapper over Fp for code that
/// passes single field elements around.
struct FpElem {
    uint32_t v = 0;
    uint32_t p = 2;

    FpElem() = default;
    FpElem(uint32_t value, uint32_t modulus) : v(value % modulus), p(modulus) {}

    friend FpElem operator+(FpElem a, FpElem b) {
        assert(a.p == b.p);
        return FpElem(Fp(a.p).add(a.v, b.v), a.p);
    }
    friend FpElem operator-(FpElem a, FpElem b) {
        assert(a.p == b.p);
        return FpElem(Fp(a.p).sub(a.v, b.v), a.p);
    }
    friend FpElem operator*(FpElem a, FpElem b) {
        assert(a.p == b.p);
        return FpElem(Fp(a.p).mul(a.v, b.v), a.p);
    }
    friend FpElem operator/(FpElem a, FpElem b) {
        assert(a.p == b.p);
        return FpElem(Fp(a.p).div(a.v, b.v), a.p);
    }
    FpElem operator-() const { return FpElem(Fp(p).neg(v), p); }
    bool operator==(const FpElem& o) const { return v == o.v && p == o.p; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    FpElem pow(uint64_t e) const { return FpElem(Fp(p).pow(v, e), p); }
    FpElem inverse() const { return FpElem(Fp(p).inv(v), p); }
};

/// Canonical modular square root of a mod p, in [0, p/2]; empty when a is
/// a non-residue.
inline std::optional<FpElem> mod_sqrt(FpElem a) {
    auto r = Fp(a.p).sqrt(a.v);
    if (!r) return std::nullopt;
    return FpElem(*r, a.p);
}

/// F_{p^2} as F_p[t]/(t^2 - n) for a fixed non-residue n; only what the
/// point counts over the quadratic extension need.
class Fp2 {
public:
    struct Elem {
        uint32_t a, b; // a + b t
    };

    explicit Fp2(uint32_t p) : F_(p) {
        assert(p % 2 == 1 && p > 2);
        n_ = 2;
        while (F_.legendre(n_) != -1) ++n_;
    }

    const Fp& base() const { return F_; }
    uint32_t nonresidue() const { return n_; }

    Elem make(uint32_t a, uint32_t b) const { return {a % F_.modulus(), b % F_.modulus()}; }
    bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }

    Elem add(Elem x, Elem y) const { return {F_.add(x.a, y.a), F_.add(x.b, y.b)}; }
    Elem mul(Elem x, Elem y) const {
        uint32_t a = F_.add(F_.mul(x.a, y.a), F_.mul(n_, F_.mul(x.b, y.b)));
        uint32_t b = F_.add(F_.mul(x.a, y.b), F_.mul(x.b, y.a));
        return {a, b};
    }

    /// Quadratic character via the norm: chi(x) = legendre(a^2 - n b^2).
    int chi(Elem x) const {
        uint32_t norm = F_.sub(F_.mul(x.a, x.a), F_.mul(n_, F_.mul(x.b, x.b)));
        return F_.legendre(norm);
    }

private:
    Fp F_;
    uint32_t n_;
};

} // namespace descent
