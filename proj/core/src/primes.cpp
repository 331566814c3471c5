#include "descent/primes.hpp"

#include <algorithm>
#include <numeric>

namespace descent {

std::vector<uint32_t> primes_up_to(uint32_t bound) {
    std::vector<uint32_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= bound; ++i)
        if (!composite[i])
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= bound; j += i)
                composite[j] = true;
    for (uint32_t i = 2; i <= bound; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Pollard rho with Brent cycle detection; n odd composite. Deterministic:
/// the polynomial offset c is advanced until a proper factor appears.
uint64_t pollard_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1, q = 1, saved = 2;
        const uint64_t block = 128;
        for (uint64_t r = 1; d == 1; r *= 2) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = f(y);
            for (uint64_t k = 0; k < r && d == 1; k += block) {
                saved = y;
                uint64_t steps = std::min(block, r - k);
                for (uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    uint64_t diff = x > y ? x - y : y - x;
                    if (diff != 0) q = mulmod_u64(q, diff, n);
                }
                d = gcd_u64(q, n);
            }
        }
        if (d == n) {
            d = 1;
            uint64_t ys = saved;
            while (d == 1) {
                ys = f(ys);
                uint64_t diff = x > ys ? x - ys : ys - x;
                if (diff == 0) break;
                d = gcd_u64(diff, n);
            }
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_u64_into(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_u64_into(d, primes);
    factor_u64_into(n / d, primes);
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // This base set decides primality for every n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<uint64_t, unsigned>> factor_u64(uint64_t n) {
    std::vector<uint64_t> primes;
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    for (uint64_t p = 7; p * p <= n && p < 1000000; p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_u64_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1u});
    }
    return out;
}

std::vector<std::pair<BigInt, unsigned>> int_factor(const BigInt& n) {
    if (n < 1) throw Error("int_factor requires n >= 1");
    std::vector<std::pair<BigInt, unsigned>> out;
    if (n == 1) return out;
    BigInt rest = n;
    for (uint32_t p : primes_up_to(1000000)) {
        if (rest == 1) break;
        BigInt bp(p);
        if (rest % bp == 0) {
            unsigned e = 0;
            while (rest % bp == 0) {
                rest /= bp;
                ++e;
            }
            out.push_back({bp, e});
        }
        if (BigInt(p) * p > rest) break;
    }
    if (rest > 1) {
        if (rest.fits_ulong_p()) {
            for (auto [p, e] : factor_u64(rest.get_ui()))
                out.push_back({BigInt(static_cast<unsigned long>(p)), e});
        } else if (is_prime(rest)) {
            out.push_back({rest, 1u});
        } else {
            // Composite cofactor above 2^64: outside the supported input
            // scale, so fail loudly instead of looping.
            throw Error("int_factor: composite cofactor above 2^64: " +
                        rest.get_str());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> prime_support(const BigInt& n) {
    if (n == 0) throw Error("prime_support of zero");
    BigInt a = abs(n);
    std::vector<BigInt> out;
    for (auto& [p, e] : int_factor(a)) out.push_back(p);
    return out;
}

} // namespace descent
