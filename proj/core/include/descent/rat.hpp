#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "descent/errors.hpp"

namespace descent {

typedef mpz_class BigInt;
typedef mpq_class BigRat;

/// Parse a base-10 integer; rejects anything but an optional sign and digits.
inline BigInt parse_int(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("integer literal without digits: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("bad integer literal: " + s);
    return BigInt(s);
}

/// Parse "n" or "n/d" with d > 0; result is canonical (gcd 1, positive
/// denominator).
inline BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw ParseError("denominator must be positive: " + s);
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// "n" when the denominator is 1, else "n/d".
inline std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Square test on integers; fills root (>= 0) when present.
inline bool is_perfect_square(const BigInt& z, BigInt* root = nullptr) {
    if (z < 0) return false;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), z.get_mpz_t());
    return true;
}

/// Square test on rationals; fills the nonnegative root when present.
inline bool rat_is_square(const BigRat& q, BigRat* root = nullptr) {
    BigInt rn, rd;
    if (!is_perfect_square(q.get_num(), &rn)) return false;
    if (!is_perfect_square(q.get_den(), &rd)) return false;
    if (root) *root = BigRat(rn, rd);
    return true;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(const BigInt& n, uint32_t p) {
    if (n == 0) throw Error("valuation of zero");
    BigInt rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), BigInt(p).get_mpz_t()));
}

/// p-adic valuation of a nonzero rational.
inline long valuation(const BigRat& q, uint32_t p) {
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

/// Reduce an integer mod p into [0, p).
inline uint32_t mod_p(const BigInt& z, uint32_t p) {
    return static_cast<uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

/// Reduce a rational mod p; empty when p divides the denominator.
inline std::optional<uint32_t> mod_p(const BigRat& q, uint32_t p) {
    uint32_t den = mod_p(q.get_den(), p);
    if (den == 0) return std::nullopt;
    uint32_t num = mod_p(q.get_num(), p);
    uint64_t inv = 1, base = den, e = p - 2, m = p;
    while (e) {
        if (e & 1) inv = inv * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<uint32_t>(num * inv % m);
}

/// lcm of the denominators of a rational vector (1 for the empty vector).
inline BigInt common_denominator(const std::vector<BigRat>& v) {
    BigInt d = 1;
    for (const auto& q : v) {
        BigInt den = q.get_den();
        BigInt g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = d / g * den;
    }
    return d;
}

} // namespace descent
