#include <doctest.h>

#include <algorithm>
#include <random>

#include "descent/localsolve.hpp"
#include "descent/primes.hpp"
#include "../common/qp_brute.hpp"

using namespace descent;

namespace {

HyperellipticCurve curve(std::initializer_list<long> coeffs) {
    std::vector<BigRat> f;
    for (long c : coeffs) f.emplace_back(c);
    return new_curve(std::move(f));
}

} // namespace

TEST_CASE("fixed local verdicts") {
    CHECK(has_qp_points(curve({2, 0, 0, 0, 0, 0, 1}), 2).solvable);
    CHECK_FALSE(has_qp_points(curve({3, 0, 0, 0, 0, 0, 3}), 3).solvable);
    CHECK_FALSE(has_qp_points(curve({3, 0, 0, 0, 0, 0, 3}), 2).solvable);
    CHECK_FALSE(real_verdict(curve({-1, 0, 0, 0, 0, 0, -1})).solvable);
    CHECK(real_verdict(curve({1, 0, 0, 0, 0, 0, 1})).solvable);
    CHECK(has_real_points(curve({0, -1, 0, 1})));
}

TEST_CASE("witnesses live and refutations partition the charts") {
    auto audit = [](const HyperellipticCurve& c, uint32_t p) {
        LocalVerdict v = has_qp_points(c, p);
        auto G = qp_brute::reciprocal_poly(c);
        int limit = qp_brute::default_depth_limit(c, p);
        if (v.solvable) {
            REQUIRE(v.witness.has_value());
            const auto& w = *v.witness;
            const auto& F = w.chart == Chart::Direct ? c.F : G;
            // the witness class keeps live descendants well past the
            // decision depth
            CHECK(qp_brute::chart_live(F, p, w.rep, w.depth,
                                       w.depth + limit));
        } else {
            REQUIRE_FALSE(v.refutation.empty());
            // every refuted class is genuinely dead for the brute checker
            // at its own decision depth
            BigRat direct_mass(0), recip_mass(0);
            for (const auto& cls : v.refutation) {
                CHECK_FALSE(cls.solvable);
                const auto& F = cls.chart == Chart::Direct ? c.F : G;
                CHECK_FALSE(qp_brute::chart_live(F, p, cls.rep, cls.depth,
                                                 cls.depth + limit));
                BigRat mass =
                    BigRat(1) / BigRat(qp_brute::pow_int(p, cls.depth));
                (cls.chart == Chart::Direct ? direct_mass : recip_mass) +=
                    mass;
            }
            // decided classes tile Z_p on the direct chart and p Z_p on
            // the reciprocal one
            CHECK(direct_mass == 1);
            CHECK(recip_mass == BigRat(1, static_cast<long>(p)));
        }
    };
    audit(curve({3, 0, 0, 0, 0, 0, 3}), 3);
    audit(curve({3, 0, 0, 0, 0, 0, 3}), 2);
    audit(curve({2, 0, 0, 0, 0, 0, 1}), 2);
    audit(curve({1, 0, 0, 0, 0, 0, 1}), 5);
    audit(curve({0, -1, 0, 1}), 2);
}

TEST_CASE("agreement with depth-bounded brute force, random curves") {
    std::mt19937 rng(7771);
    int tried = 0;
    while (tried < 30) {
        int deg = 3 + static_cast<int>(rng() % 4);
        std::vector<BigRat> f(deg + 1);
        for (auto& x : f) x = BigRat(static_cast<long>(rng() % 9) - 4);
        if (f.back() == 0) continue;
        HyperellipticCurve c{};
        try {
            c = new_curve(f);
        } catch (const NotSquarefree&) {
            continue;
        }
        ++tried;
        for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
            bool impl = has_qp_points(c, p).solvable;
            bool brute =
                qp_brute::solvable(c, p, qp_brute::default_depth_limit(c, p));
            CHECK_MESSAGE(impl == brute, "p = ", p);
        }
    }
}

TEST_CASE("everywhere-local solvability orders places canonically") {
    auto [els, verdicts] = is_els(curve({1, 0, 0, 0, 0, 0, 1}));
    CHECK(els);
    REQUIRE_FALSE(verdicts.empty());
    CHECK(verdicts.front().is_real_place);
    for (size_t i = 2; i < verdicts.size(); ++i)
        CHECK(verdicts[i - 1].p < verdicts[i].p);
    for (const auto& v : verdicts) CHECK(v.solvable);

    // first failing place is reported and the scan stops there
    auto [els2, verdicts2] = is_els(curve({3, 0, 0, 0, 0, 0, 3}));
    CHECK_FALSE(els2);
    CHECK_FALSE(verdicts2.back().solvable);
    CHECK(verdicts2.back().p == 2);
    for (size_t i = 0; i + 1 < verdicts2.size(); ++i)
        CHECK(verdicts2[i].solvable);

    auto [els3, verdicts3] = is_els(curve({-1, 0, 0, 0, 0, 0, -1}));
    CHECK_FALSE(els3);
    REQUIRE(verdicts3.size() == 1);
    CHECK(verdicts3[0].is_real_place);
    CHECK_FALSE(verdicts3[0].solvable);
}

TEST_CASE("genus-2 ELS includes small good primes") {
    // take a genus-2 curve with few F_5 points if possible; regardless,
    // the verdict list must mention every good prime <= 13
    auto c = curve({2, 0, 0, 0, 0, 0, 1});  // x^6 + 2
    auto [els, verdicts] = is_els(c);
    std::vector<uint32_t> seen;
    for (auto& v : verdicts)
        if (!v.is_real_place) seen.push_back(v.p);
    if (els) {
        for (uint32_t p : {5u, 7u, 11u, 13u})
            if (is_good_prime(c, p))
                CHECK(std::find(seen.begin(), seen.end(), p) != seen.end());
    }
    CHECK(els);  // x^6 + 2 is everywhere locally solvable
}
