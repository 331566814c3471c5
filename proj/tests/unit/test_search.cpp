#include <doctest.h>

#include <algorithm>

#include "descent/search.hpp"

using namespace descent;

namespace {

HyperellipticCurve curve(std::initializer_list<long> coeffs) {
    std::vector<BigRat> f;
    for (long c : coeffs) f.emplace_back(c);
    return new_curve(std::move(f));
}

bool contains(const std::vector<RationalPoint>& pts, const RationalPoint& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

} // namespace

TEST_CASE("x^6 + 1 at height 10: exactly the four known points") {
    auto pts = point_search(curve({1, 0, 0, 0, 0, 0, 1}), 10);
    REQUIRE(pts.size() == 4);
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(1)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(-1)}));
    CHECK(contains(pts, {RationalPoint::InfPlus, BigRat(0), BigRat(0)}));
    CHECK(contains(pts, {RationalPoint::InfMinus, BigRat(0), BigRat(0)}));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("odd model picks up integral and fractional points") {
    auto pts = point_search(curve({1, 0, 0, 1}), 5);  // x^3 + 1
    CHECK(contains(pts, {RationalPoint::InfOdd, BigRat(0), BigRat(0)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(-1), BigRat(0)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(1)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(-1)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(2), BigRat(3)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(2), BigRat(-3)}));
    REQUIRE(pts.size() == 6);

    // y^2 = x^3 - x + 1 owns (19/25, 103/125); height 25 finds it
    auto frac = point_search(curve({1, -1, 0, 1}), 25);
    CHECK(contains(frac,
                   {RationalPoint::Affine, BigRat(19, 25), BigRat(103, 125)}));
    CHECK(contains(frac,
                   {RationalPoint::Affine, BigRat(19, 25), BigRat(-103, 125)}));
    // and not at height 24
    CHECK_FALSE(contains(point_search(curve({1, -1, 0, 1}), 24),
                         {RationalPoint::Affine, BigRat(19, 25),
                          BigRat(103, 125)}));
}

TEST_CASE("non-integral coefficients are handled") {
    // y^2 = x^3 + 1/4 passes through (0, 1/2)
    auto c = new_curve({BigRat(1, 4), BigRat(0), BigRat(0), BigRat(1)});
    auto pts = point_search(c, 4);
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(1, 2)}));
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(-1, 2)}));
    for (auto& pt : pts) CHECK_NOTHROW(validate_point(c, pt));
}

TEST_CASE("infinity points obey the leading-coefficient square rule") {
    // 2x^6 + 1: lc = 2 is not a square, no rational infinity points
    auto pts = point_search(curve({1, 0, 0, 0, 0, 0, 2}), 3);
    for (auto& pt : pts) CHECK(pt.kind == RationalPoint::Affine);
    CHECK(contains(pts, {RationalPoint::Affine, BigRat(0), BigRat(1)}));

    // 4x^6 + ... : lc = 4 square, infinity present
    auto q = point_search(curve({1, 0, 0, 0, 0, 0, 4}), 2);
    CHECK(contains(q, {RationalPoint::InfPlus, BigRat(0), BigRat(0)}));
    CHECK(contains(q, {RationalPoint::InfMinus, BigRat(0), BigRat(0)}));
}

TEST_CASE("x^6 + 2 has no affine points up to height 40") {
    auto pts = point_search(curve({2, 0, 0, 0, 0, 0, 1}), 40);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].kind == RationalPoint::InfPlus);
    CHECK(pts[1].kind == RationalPoint::InfMinus);
}

TEST_CASE("local-condition filters prune the result") {
    auto c = curve({1, 0, 0, 1});  // x^3 + 1
    LocalConditions cond;
    cond.affine_only = true;
    auto pts = point_search(c, 5, &cond);
    for (auto& pt : pts) CHECK(pt.kind == RationalPoint::Affine);
    CHECK(pts.size() == 5);

    // require x = 0 mod 5: keeps (0, +-1), drops (2, +-3), (-1, 0) and
    // infinity (which has no x-residue)
    LocalConditions xres;
    xres.per_prime.push_back({5, std::nullopt, std::vector<uint32_t>{0}});
    auto restricted = point_search(c, 5, &xres);
    REQUIRE(restricted.size() == 2);
    CHECK(contains(restricted, {RationalPoint::Affine, BigRat(0), BigRat(1)}));
    CHECK(contains(restricted, {RationalPoint::Affine, BigRat(0), BigRat(-1)}));

    // explicit point list: allow only the reduction of (2, 3)
    LocalConditions plist;
    plist.per_prime.push_back(
        {7, std::vector<CurvePointFp>{{CurvePointFp::Affine, 2, 3}},
         std::nullopt});
    auto only = point_search(c, 5, &plist);
    REQUIRE(only.size() == 1);
    CHECK(contains(only, {RationalPoint::Affine, BigRat(2), BigRat(3)}));
}
