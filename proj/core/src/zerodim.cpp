#include "descent/zerodim.hpp"

#include <set>
#include <utility>

#include "descent/errors.hpp"
#include "descent/primes.hpp"

namespace descent {

namespace {

void validate_perm(const std::vector<uint32_t>& s, uint32_t n) {
    if (s.size() != n)
        throw ParseError("permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (uint32_t v : s) {
        if (v < 1 || v > n || seen[v - 1])
            throw ParseError("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

/// (a after b)(i) = a(b(i)), one-based tables.
std::vector<uint32_t> compose(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

} // namespace

std::string to_string(CoverVerdict v) {
    switch (v) {
        case CoverVerdict::Holds: return "holds";
        case CoverVerdict::HypothesisFails: return "hypothesis_fails";
        case CoverVerdict::DegreeNotOneCounterexample:
            return "degree_not_one_counterexample";
    }
    return "holds";
}

std::string to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Split: return "split";
        case SplittingType::Inert: return "inert";
        case SplittingType::Ramified: return "ramified";
    }
    return "inert";
}

CoverVerdict fixed_point_cover_check(const PermGroupSpec& g,
                                     uint64_t closure_budget) {
    uint32_t n = g.degree;
    if (n == 0) throw ParseError("the degree must be at least 1");
    for (const auto& s : g.generators) validate_perm(s, n);

    std::vector<uint32_t> id(n);
    for (uint32_t i = 0; i < n; ++i) id[i] = i + 1;
    std::set<std::vector<uint32_t>> closure{id};
    std::vector<std::vector<uint32_t>> stack{id};
    while (!stack.empty()) {
        std::vector<uint32_t> cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& s : g.generators) {
            std::vector<uint32_t> nxt = compose(s, cur);
            if (closure.insert(nxt).second) {
                if (closure.size() > closure_budget)
                    throw ClosureBudgetExceeded(
                        "the generated group exceeds the budget of " +
                        std::to_string(closure_budget));
                stack.push_back(std::move(nxt));
            }
        }
    }

    std::set<uint32_t> orbit_of_one;
    for (const auto& s : closure) orbit_of_one.insert(s[0]);
    bool transitive = orbit_of_one.size() == n;

    bool every_element_fixes = true;
    for (const auto& s : closure) {
        bool fixes = false;
        for (uint32_t i = 0; i < n && !fixes; ++i)
            if (s[i] == i + 1) fixes = true;
        if (!fixes) {
            every_element_fixes = false;
            break;
        }
    }

    if (!transitive || !every_element_fixes)
        return CoverVerdict::HypothesisFails;
    return n == 1 ? CoverVerdict::Holds
                  : CoverVerdict::DegreeNotOneCounterexample;
}

SplittingType splitting_type(const BigInt& d, uint32_t p) {
    if (p == 2 || !is_prime_u64(p))
        throw Error("splitting_type needs an odd prime");
    if (d == 0) throw Error("splitting_type needs a nonzero integer");
    BigInt P(static_cast<unsigned long>(p));
    if (mpz_divisible_p(d.get_mpz_t(), P.get_mpz_t()))
        return SplittingType::Ramified;
    return mpz_legendre(d.get_mpz_t(), P.get_mpz_t()) == 1
               ? SplittingType::Split
               : SplittingType::Inert;
}

namespace {

bool local_square_at_2(const BigInt& d) {
    BigInt u, two(2);
    mp_bitcnt_t v = mpz_remove(u.get_mpz_t(), d.get_mpz_t(), two.get_mpz_t());
    if (v % 2 != 0) return false;
    return mpz_fdiv_ui(u.get_mpz_t(), 8) == 1;
}

bool local_square_at_odd(const BigInt& d, const BigInt& p) {
    BigInt u;
    mp_bitcnt_t v = mpz_remove(u.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (v % 2 != 0) return false;
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

} // namespace

QuadHasseResult quad_etale_hasse_check(const BigInt& d1, const BigInt& d2) {
    if (d1 == 0 || d2 == 0)
        throw Error("quad_etale_hasse_check needs nonzero integers");
    std::vector<BigInt> ds{d1, d2, d1 * d2};

    QuadHasseResult res;
    res.global = false;
    for (const BigInt& d : ds)
        if (d > 0 && is_perfect_square(d)) res.global = true;

    res.everywhere_local = true;
    bool real_ok = false;
    for (const BigInt& d : ds)
        if (d > 0) real_ok = true;
    if (!real_ok) res.everywhere_local = false;

    bool two_ok = false;
    for (const BigInt& d : ds)
        if (local_square_at_2(d)) two_ok = true;
    if (!two_ok) res.everywhere_local = false;

    for (const BigInt& p : prime_support(ds[2])) {
        if (p == 2) continue;
        bool ok = false;
        for (const BigInt& d : ds)
            if (local_square_at_odd(d, p)) ok = true;
        if (!ok) res.everywhere_local = false;
    }
    return res;
}

} // namespace descent
