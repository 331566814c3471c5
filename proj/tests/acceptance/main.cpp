// Release gates for the descent library: every gate below must hold, at
// its stated time budget, before a release is cut. One verdict line is
// printed per gate; the exit code is the number of failed gates. Frozen
// digests and counts pin down runs that were verified by hand once and
// must never drift.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../common/fixtures.hpp"
#include "../common/qp_brute.hpp"
#include "descent/census.hpp"
#include "descent/curve.hpp"
#include "descent/ec.hpp"
#include "descent/errors.hpp"
#include "descent/fp.hpp"
#include "descent/group_structure.hpp"
#include "descent/localsolve.hpp"
#include "descent/mumford.hpp"
#include "descent/poly.hpp"
#include "descent/primes.hpp"
#include "descent/search.hpp"
#include "descent/sieve.hpp"
#include "descent/zerodim.hpp"

using namespace descent;

namespace {

int g_failures = 0;

struct GateCheck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw GateCheck(what);
}

void gate(int id, const std::string& label, double budget_s,
          const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string reason;
    try {
        body();
    } catch (const std::exception& e) {
        reason = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (reason.empty() && budget_s > 0 && secs > budget_s) {
        std::ostringstream os;
        os << "exceeded the " << budget_s << "s budget";
        reason = os.str();
    }
    char line[512];
    std::snprintf(line, sizeof line, "%s criterion-%02d %s (%.1fs)%s%s",
                  reason.empty() ? "PASS" : "FAIL", id, label.c_str(), secs,
                  reason.empty() ? "" : ": ", reason.c_str());
    std::cout << line << std::endl;
    if (!reason.empty()) ++g_failures;
}

HyperellipticCurve curve(std::initializer_list<long> coeffs) {
    std::vector<BigRat> f;
    for (long c : coeffs) f.emplace_back(c);
    return new_curve(std::move(f));
}

RationalPoint affine(long x, long y) {
    return {RationalPoint::Affine, BigRat(x), BigRat(y)};
}

std::string temp_path(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p.string();
}

FpPoly random_poly(std::mt19937_64& rng, const FpCtx& K, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<uint32_t> dc(0, K.F.modulus() - 1);
    int d = dd(rng);
    std::vector<uint32_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = dc(rng);
    return FpPoly(K, std::move(c));
}

// ---- gate bodies -----------------------------------------------------

void arithmetic_kernel() {
    // square roots modulo every odd prime up to 97, against the full
    // squaring table
    for (uint32_t p : primes_up_to(97)) {
        if (p == 2) continue;
        Fp F(p);
        std::set<uint32_t> squares;
        for (uint32_t a = 0; a < p; ++a) squares.insert(F.mul(a, a));
        for (uint32_t a = 0; a < p; ++a) {
            auto r = F.sqrt(a);
            bool is_sq = squares.count(a) > 0;
            check(r.has_value() == is_sq, "sqrt existence mismatch");
            if (r) {
                check(F.mul(*r, *r) == a, "sqrt does not square back");
                check(*r <= p - *r, "sqrt is not the canonical root");
            }
            int chi = F.legendre(a);
            check(chi == (a == 0 ? 0 : is_sq ? 1 : -1),
                  "character disagrees with the table");
        }
    }
    // both residues modulo 2 are squares of themselves
    for (uint32_t a = 0; a < 2; ++a)
        check(a * a % 2 == a, "squaring table mod 2");

    // Euclidean identities on 1000 random polynomial pairs
    std::mt19937_64 rng(421);
    const uint32_t ps[] = {5, 13, 101};
    for (int iter = 0; iter < 1000; ++iter) {
        FpCtx K(ps[iter % 3]);
        FpPoly a = random_poly(rng, K, 6);
        FpPoly b = random_poly(rng, K, 6);
        if (b.is_zero()) b = poly_const(K, 1u);
        auto [q, r] = poly_divrem(a, b);
        check(poly_add(poly_mul(q, b), r) == a, "divrem does not reassemble");
        check(r.is_zero() || r.deg() < b.deg(), "remainder degree too big");
        if (!a.is_zero() || !b.is_zero()) {
            auto [g, s, t] = poly_xgcd(a, b);
            check(poly_add(poly_mul(s, a), poly_mul(t, b)) == g,
                  "Bezout identity fails");
            check(g == poly_gcd(a, b), "xgcd and gcd disagree");
            check(g.is_monic(), "gcd is not monic");
            check(poly_mod(a, g).is_zero() && poly_mod(b, g).is_zero(),
                  "gcd does not divide");
        }
    }
}

void hasse_weil_window() {
    std::mt19937_64 rng(422);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> degree(5, 6);
    int made = 0;
    while (made < 50) {
        int n = degree(rng);
        std::vector<BigRat> f(static_cast<std::size_t>(n) + 1);
        for (auto& v : f) v = BigRat(coeff(rng));
        if (f.back() == 0) continue;
        HyperellipticCurve c{};
        try {
            c = new_curve(f);
        } catch (const NotSquarefree&) {
            continue;
        }
        ++made;
        for (uint32_t p : good_primes(c, 50)) {
            long long N = static_cast<long long>(points_over_fp(c, p).size());
            long long d = N - (static_cast<long long>(p) + 1);
            check(d * d <= 16LL * p, "point count outside the genus-2 window");
        }
    }
}

void group_laws() {
    auto c = curve({1, -1, 0, 0, 0, 1});  // y^2 = x^5 - x + 1
    for (uint32_t p : {7u, 11u, 31u}) {
        auto f = curve_poly_fp(c, p);
        auto elems = jac_elements(c, p);
        std::mt19937_64 rng(423 + p);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        auto I = mumford_identity(f.K);
        for (int i = 0; i < 200; ++i) {
            const auto& a = elems[pick(rng)];
            const auto& b = elems[pick(rng)];
            const auto& d = elems[pick(rng)];
            check(mumford_eq(cantor_add(f, cantor_add(f, a, b), d),
                             cantor_add(f, a, cantor_add(f, b, d))),
                  "associativity fails");
            check(mumford_eq(cantor_add(f, a, b), cantor_add(f, b, a)),
                  "commutativity fails");
            check(mumford_eq(cantor_add(f, a, mumford_neg(a)), I),
                  "inverse fails");
        }
    }

    auto cubic = curve({1, 0, 0, 1});  // y^2 = x^3 + 1
    auto E = ec_from_cubic(cubic);
    auto P = ec_lift_point(cubic, affine(2, 3));
    check(ec_eq(E, ec_add(E, P, P), ec_lift_point(cubic, affine(0, 1))),
          "doubling of (2,3) is not (0,1)");
    check(ec_eq(E, ec_mul(E, BigInt(3), P),
                ec_lift_point(cubic, affine(-1, 0))),
          "tripling of (2,3) is not (-1,0)");
}

void jacobian_order_formula() {
    for (auto c : {curve({0, -1, 0, 0, 0, 1}), curve({1, -1, 0, 0, 0, 1})}) {
        for (uint32_t p : good_primes(c, 31)) {
            uint64_t n1 = points_over_fp(c, p).size();
            uint64_t n2 = count_points_fp2(c, p);
            uint64_t predicted = (n1 * n1 + n2) / 2 - p;
            check(jac_elements(c, p).size() == predicted,
                  "enumeration disagrees with the trace formula");
            check(jac_order_fp(c, p) == predicted, "cached order disagrees");
            long double s = sqrtl(static_cast<long double>(p));
            long double lo = (s - 1) * (s - 1) * (s - 1) * (s - 1);
            long double hi = (s + 1) * (s + 1) * (s + 1) * (s + 1);
            long double ord = static_cast<long double>(predicted);
            check(lo <= ord && ord <= hi, "order outside the Weil interval");
        }
    }
}

void reduction_homomorphism() {
    // genus-2 fixtures: divisors built from the rational points
    for (auto c : {curve({0, -1, 0, 0, 0, 1}), curve({1, -1, 0, 0, 0, 1})}) {
        std::vector<MumfordQ> pool;
        for (const auto& P : point_search(c, 3))
            pool.push_back(abel_jacobi(c, P));
        auto fq = curve_poly_q(c);
        std::size_t base = pool.size();
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t j = i; j < base; ++j)
                pool.push_back(cantor_add(fq, pool[i], pool[j]));
        std::mt19937_64 rng(425);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const uint32_t ps[] = {7, 11, 13};
        int done = 0, attempts = 0;
        while (done < 100 && ++attempts < 2000) {
            const auto& a = pool[pick(rng)];
            const auto& b = pool[pick(rng)];
            uint32_t p = ps[attempts % 3];
            auto sum = cantor_add(fq, a, b);
            try {
                check(mumford_eq(mumford_reduce(c, sum, p),
                                 cantor_add(curve_poly_fp(c, p),
                                            mumford_reduce(c, a, p),
                                            mumford_reduce(c, b, p))),
                      "divisor reduction is not a homomorphism");
            } catch (const BadReductionDenominator&) {
                continue;  // the pair misses this p's precondition
            }
            ++done;
        }
        check(done == 100, "too few good-denominator pairs found");
    }

    // elliptic fixture: multiples of the order-6 generator
    auto cubic = curve({1, 0, 0, 1});
    auto E = ec_from_cubic(cubic);
    auto g = ec_lift_point(cubic, affine(2, 3));
    std::mt19937_64 rng(426);
    std::uniform_int_distribution<int> mult(-6, 6);
    const uint32_t ps[] = {5, 7, 11, 13};
    for (int i = 0; i < 100; ++i) {
        int m = mult(rng), n = mult(rng);
        uint32_t p = ps[i % 4];
        auto Ep = ec_reduce_curve(E, p);
        auto lhs = ec_reduce_point(ec_mul(E, BigInt(m + n), g), p);
        auto rhs = ec_add(Ep, ec_reduce_point(ec_mul(E, BigInt(m), g), p),
                          ec_reduce_point(ec_mul(E, BigInt(n), g), p));
        check(ec_eq(Ep, lhs, rhs), "point reduction is not a homomorphism");
    }
}

void torsion_injectivity() {
    auto cubic = curve({1, 0, 0, 1});
    auto E = ec_from_cubic(cubic);
    auto g = ec_lift_point(cubic, affine(2, 3));
    std::set<std::array<uint64_t, 6>> images;
    for (int k = 0; k < 6; ++k) {
        auto P = ec_mul(E, BigInt(k), g);
        std::array<uint64_t, 6> img{};
        int slot = 0;
        for (uint32_t p : {5u, 7u}) {
            auto Q = ec_reduce_point(P, p);
            img[slot++] = Q.infinity ? 1 : 0;
            img[slot++] = Q.infinity ? 0 : Q.x;
            img[slot++] = Q.infinity ? 0 : Q.y;
        }
        images.insert(img);
    }
    check(images.size() == 6,
          "torsion does not inject into E(F_5) x E(F_7)");
}

void rank_zero_pullback() {
    auto run = [](const char* fixture, std::vector<RationalPoint> expect) {
        auto prob = sieve_problem_from_json_string(fixture);
        auto got = finite_mw_pullback(prob.curve, *prob.morphism, *prob.target,
                                      prob.subgroup);
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        check(got == expect, "pullback misses the known rational points");
        check(point_search(prob.curve, 1000) == expect,
              "search to height 1000 finds extra points");
    };
    run(fixtures::kSixPlusOne,
        {affine(0, 1), affine(0, -1),
         {RationalPoint::InfPlus, BigRat(0), BigRat(0)},
         {RationalPoint::InfMinus, BigRat(0), BigRat(0)}});
    run(fixtures::kSixMinusOne,
        {affine(1, 0), affine(-1, 0),
         {RationalPoint::InfPlus, BigRat(0), BigRat(0)},
         {RationalPoint::InfMinus, BigRat(0), BigRat(0)}});
}

void sieve_soundness() {
    for (uint64_t N : {2u, 3u, 4u, 6u, 12u}) {
        auto prob = sieve_problem_from_json_string(fixtures::kSixPlusOne);
        prob.modulus = N;
        prob.primes.clear();
        for (uint32_t p : good_primes(prob.curve, 50))
            if (is_good_prime(*prob.target, p)) prob.primes.push_back(p);
        auto cert = sieve_run(prob);
        check(cert.outcome == "SURVIVORS",
              "a curve with rational points lost them all");
        uint64_t d = std::gcd(N, 6ul);
        for (const auto& rep : cert.per_prime) {
            check(rep.survivors_after == rep.surviving.size(),
                  "per-prime bookkeeping is inconsistent");
            for (uint64_t k : {0ul, 2ul, 4ul}) {
                std::vector<uint64_t> label{k % d};
                check(std::find(rep.surviving.begin(), rep.surviving.end(),
                                label) != rep.surviving.end(),
                      "a known point's coset was sieved out");
            }
        }
    }
}

void sieve_nonexistence() {
    const std::string frozen = "fnv1a64:036f77732ea76001";
    bool proved = false;
    for (uint64_t N : {24u, 48u, 120u}) {
        auto prob = sieve_problem_from_json_string(fixtures::kSixPlusTwo);
        prob.modulus = N;
        auto cert = sieve_run(prob);
        if (N == 24) {
            check(cert.outcome == "EMPTY", "first rung fails to prove");
            check(cert.digest == frozen, "digest drifted from the frozen run");
            auto replay = replay_certificate(cert);
            check(certificate_to_json_string(replay) ==
                      certificate_to_json_string(cert),
                  "replay is not bit-identical");
        }
        if (cert.outcome == "EMPTY") proved = true;
    }
    check(proved, "no rung of the ladder reached EMPTY");
}

void poonen_criterion() {
    auto with_s = [](const char* fixture, std::vector<uint32_t> S) {
        auto prob = sieve_problem_from_json_string(fixture);
        prob.primes = std::move(S);
        return poonen_run(prob);
    };

    auto c5 = with_s(fixtures::kSixPlusOne, {5});
    check(c5.outcome == "SURVIVORS", "one-prime run should not be empty");
    std::vector<std::vector<uint64_t>> expect{{0}, {2}, {3}, {4}};
    check(c5.survivors == expect, "frozen one-prime survivor set drifted");

    // enlarging S only removes survivors: the projection of every larger
    // run onto a smaller prime set lands in the smaller run's survivors
    auto project_into = [](const SieveCertificate& big,
                           const SieveCertificate& small) {
        std::size_t width = 0;
        for (const auto& rep : small.per_prime)
            width += rep.invariants.size();
        std::set<std::vector<uint64_t>> allowed(small.survivors.begin(),
                                                small.survivors.end());
        for (const auto& s : big.survivors) {
            std::vector<uint64_t> head(s.begin(),
                                       s.begin() + static_cast<long>(width));
            check(allowed.count(head) > 0,
                  "an enlarged prime set revived a class");
        }
    };
    auto c57 = with_s(fixtures::kSixPlusOne, {5, 7});
    auto c_all = with_s(fixtures::kSixPlusOne, {5, 7, 11, 13});
    project_into(c57, c5);
    project_into(c_all, c57);

    auto empty57 = with_s(fixtures::kSixPlusTwo, {5, 7});
    check(empty57.outcome == "EMPTY", "frozen two-prime emptiness drifted");
    auto empty_all = with_s(fixtures::kSixPlusTwo, {5, 7, 11, 13});
    check(empty_all.outcome == "EMPTY", "emptiness must survive enlargement");
}

void local_solvability_oracle() {
    auto fixed = [](HyperellipticCurve c, uint32_t p, bool expect) {
        check(has_qp_points(c, p).solvable == expect,
              "fixed verdict drifted at p = " + std::to_string(p));
    };
    fixed(curve({2, 0, 0, 0, 0, 0, 1}), 2, true);
    fixed(curve({3, 0, 0, 0, 0, 0, 3}), 3, false);
    check(!real_verdict(curve({-1, 0, 0, 0, 0, 0, -1})).solvable,
          "negative definite sextic cannot have real points");

    std::mt19937_64 rng(431);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> degree(3, 6);
    int made = 0;
    while (made < 30) {
        int n = degree(rng);
        std::vector<BigRat> f(static_cast<std::size_t>(n) + 1);
        for (auto& v : f) v = BigRat(coeff(rng));
        if (f.back() == 0) continue;
        HyperellipticCurve c{};
        try {
            c = new_curve(f);
        } catch (const NotSquarefree&) {
            continue;
        }
        ++made;
        for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
            bool impl = has_qp_points(c, p).solvable;
            bool brute =
                qp_brute::solvable(c, p, qp_brute::default_depth_limit(c, p));
            check(impl == brute, "oracle disagreement at p = " +
                                     std::to_string(p));
        }
    }
}

void zero_dimensional_results() {
    auto r = quad_etale_hasse_check(BigInt(13), BigInt(17));
    check(r.everywhere_local && !r.global,
          "the (13,17) scheme must be a local-global counterexample");

    // exhaustive sweep of one- and two-generator actions on up to five
    // letters: the counting argument never produces a counterexample
    for (uint32_t n = 1; n <= 5; ++n) {
        std::vector<uint32_t> id(n);
        for (uint32_t i = 0; i < n; ++i) id[i] = i + 1;
        std::vector<std::vector<uint32_t>> perms;
        std::vector<uint32_t> cur = id;
        do {
            perms.push_back(cur);
        } while (std::next_permutation(cur.begin(), cur.end()));
        for (const auto& a : perms) {
            check(fixed_point_cover_check({n, {a}}) !=
                      CoverVerdict::DegreeNotOneCounterexample,
                  "single-generator counterexample claimed");
            for (const auto& b : perms)
                check(fixed_point_cover_check({n, {a, b}}) !=
                          CoverVerdict::DegreeNotOneCounterexample,
                      "two-generator counterexample claimed");
        }
    }
}

void census_regression() {
    std::string log = temp_path("descent_acceptance_census.jsonl");
    FamilySpec spec;
    spec.degrees = {6};
    spec.lo = -1;
    spec.hi = 1;
    const uint32_t H = 12;

    auto s = census_run(spec, H, log);
    check(s.total == 522, "total record count drifted");
    auto at = [&](const char* k) {
        auto it = s.counts.find(k);
        return it == s.counts.end() ? 0ull : it->second;
    };
    check(at("HAS_POINT") == 370, "HAS_POINT count drifted");
    check(at("LOCAL_OBSTRUCTION") == 45, "LOCAL_OBSTRUCTION count drifted");
    check(at("ELS_UNRESOLVED") == 3, "ELS_UNRESOLVED count drifted");
    check(at("SINGULAR_SKIPPED") == 104, "SINGULAR_SKIPPED count drifted");
    uint64_t sum = 0;
    for (const auto& [k, v] : s.counts) {
        (void)k;
        sum += v;
    }
    check(sum == s.total, "classifications do not partition the family");

    // every record is internally consistent with a fresh computation
    std::set<std::string> ids, els_ids;
    for (const auto& r : census_load_log(log)) {
        check(ids.insert(r.id).second, "an id was classified twice");
        std::vector<BigRat> f;
        std::stringstream ss(r.id);
        std::string tok;
        while (std::getline(ss, tok, ',')) f.push_back(parse_rat(tok));
        if (r.cls == Classification::SingularSkipped) {
            bool threw = false;
            try {
                new_curve(f);
            } catch (const NotSquarefree&) {
                threw = true;
            }
            check(threw, "a skipped curve is not singular");
            continue;
        }
        auto c = new_curve(f);
        switch (r.cls) {
            case Classification::HasPoint:
                check(r.point.has_value(), "HAS_POINT without a point");
                validate_point(c, *r.point);
                break;
            case Classification::LocalObstruction:
                if (r.place == "real")
                    check(!real_verdict(c).solvable, "real place is fine");
                else
                    check(!has_qp_points(
                               c, static_cast<uint32_t>(std::stoul(r.place)))
                               .solvable,
                          "recorded place is solvable after all");
                break;
            case Classification::ElsUnresolved:
                check(is_els(c).first, "unresolved curve is not ELS");
                check(point_search(c, H).empty(), "unresolved curve has a point");
                els_ids.insert(r.id);
                break;
            default:
                check(false, "unexpected classification in a fresh run");
        }
    }
    check(ids.size() == 522, "log holds a different id set than the summary");
    check(els_ids == std::set<std::string>{"-1,-1,-1,1,1,1,-1",
                                           "-1,-1,1,-1,1,0,-1",
                                           "-1,-1,1,0,1,-1,-1"},
          "the unresolved trio drifted");

    // resume determinism: drop the tail, recompute, reach the same summary
    std::ifstream in(log, std::ios::binary);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    in.close();
    std::ofstream out(log, std::ios::binary | std::ios::trunc);
    for (std::size_t i = 0; i + 100 < lines.size(); ++i) out << lines[i] << "\n";
    out.close();
    auto s2 = census_run(spec, H, log, true);
    check(s2.total == s.total && s2.counts == s.counts,
          "resumed run reached a different summary");
    std::filesystem::remove(log);
}

void finite_level_membership() {
    // direct computation: which multiples of the generator reduce into
    // the fixed point set Z = {O, (0,1), (0,-1)} at every p in S
    auto cubic = curve({1, 0, 0, 1});
    auto E = ec_from_cubic(cubic);
    auto g = ec_lift_point(cubic, affine(2, 3));
    const std::vector<RationalPoint> Z{
        affine(0, 1), affine(0, -1)};  // plus the identity
    std::set<uint64_t> direct;
    for (uint64_t k = 0; k < 6; ++k) {
        bool in_all = true;
        for (uint32_t p : {5u, 7u, 11u, 13u}) {
            auto Ep = ec_reduce_curve(E, p);
            auto red = ec_reduce_point(ec_mul(E, BigInt(k), g), p);
            bool member = ec_eq(Ep, red, ec_identity(Ep));
            for (const auto& z : Z)
                member = member ||
                         ec_eq(Ep, red,
                               ec_reduce_point(ec_lift_point(cubic, z), p));
            if (!member) {
                in_all = false;
                break;
            }
        }
        if (in_all) direct.insert(k);
    }
    check(direct == std::set<uint64_t>{0, 2, 4},
          "direct membership list is not {0, 2, 4}");

    // the sieve computes the same list when the allowed curve classes are
    // exactly the preimages of Z
    auto prob = sieve_problem_from_json_string(fixtures::kSixPlusOne);
    for (uint32_t p : prob.primes) {
        LocalConditions::PerPrime cond;
        cond.p = p;
        cond.points = std::vector<CurvePointFp>{
            {CurvePointFp::InfPlus, 0, 0},
            {CurvePointFp::InfMinus, 0, 0},
            {CurvePointFp::Affine, 0, 1},
            {CurvePointFp::Affine, 0, p - 1}};
        prob.conditions.per_prime.push_back(cond);
    }
    auto cert = sieve_run(prob);
    check(cert.outcome == "SURVIVORS", "the fixed point set was lost");
    std::set<uint64_t> sieved;
    for (const auto& s : cert.survivors) {
        check(s.size() == 1, "unexpected label width");
        sieved.insert(s[0]);
    }
    check(sieved == direct, "sieve and direct computation disagree");
}

} // namespace

int main() {
    gate(1, "arithmetic kernel: square roots and Euclidean identities", 10,
         arithmetic_kernel);
    gate(2, "point counts stay inside the genus-2 window", 30,
         hasse_weil_window);
    gate(3, "Jacobian and elliptic group laws", 0, group_laws);
    gate(4, "enumerated Jacobian orders match the trace formula", 60,
         jacobian_order_formula);
    gate(5, "reduction commutes with addition", 0, reduction_homomorphism);
    gate(6, "rational torsion injects into two good fibers", 0,
         torsion_injectivity);
    gate(7, "rank-zero pullback recovers the rational points", 10,
         rank_zero_pullback);
    gate(8, "sieve never kills a coset holding a rational point", 0,
         sieve_soundness);
    gate(9, "frozen emptiness certificate reproduces bit for bit", 300,
         sieve_nonexistence);
    gate(10, "product-sieve fixtures and prime-set monotonicity", 0,
         poonen_criterion);
    gate(11, "p-adic solvability agrees with bounded brute force", 60,
         local_solvability_oracle);
    gate(12, "quadratic scheme counterexample and cover sweep", 60,
         zero_dimensional_results);
    gate(13, "sextic census over {-1,0,1} reproduces frozen counts", 600,
         census_regression);
    gate(14, "membership at level 6 returns exactly the fixed classes", 0,
         finite_level_membership);

    if (g_failures == 0)
        std::cout << "ALL GATES PASSED" << std::endl;
    else
        std::cout << g_failures << " GATE(S) FAILED" << std::endl;
    return g_failures;
}
