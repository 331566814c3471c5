#include <doctest.h>

#include <random>

#include "descent/poly.hpp"
#include "descent/rat.hpp"

using namespace descent;

TEST_CASE("rational parsing is canonical") {
    CHECK(parse_rat("6/4") == BigRat(3, 2));
    CHECK(parse_rat("-6/4") == BigRat(-3, 2));
    CHECK(parse_rat("0/7") == 0);
    CHECK(to_string(parse_rat("6/4")) == "3/2");
    CHECK(to_string(parse_rat("8/4")) == "2");
    CHECK(parse_rat("6/4").get_den() == 2);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_int("1.5"), ParseError);
}

TEST_CASE("square detection and valuations") {
    BigInt root;
    CHECK(is_perfect_square(BigInt(144), &root));
    CHECK(root == 12);
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
    CHECK_FALSE(is_perfect_square(BigInt(2)));
    BigRat r;
    CHECK(rat_is_square(BigRat(9, 4), &r));
    CHECK(r == BigRat(3, 2));
    CHECK_FALSE(rat_is_square(BigRat(2, 9)));

    CHECK(valuation(BigInt(48), 2) == 4);
    CHECK(valuation(BigRat(3, 8), 2) == -3);
    CHECK(valuation(BigRat(50, 3), 5) == 2);
    CHECK_THROWS_AS(valuation(BigInt(0), 3), Error);
}

TEST_CASE("modular reduction of rationals") {
    CHECK(mod_p(BigInt(-1), 7) == 6);
    auto r = mod_p(BigRat(1, 2), 7);
    REQUIRE(r.has_value());
    CHECK(*r == 4);  // 2 * 4 = 8 = 1 mod 7
    CHECK_FALSE(mod_p(BigRat(1, 7), 7).has_value());
    CHECK(common_denominator({BigRat(1, 6), BigRat(3, 4)}) == 12);
    CHECK(common_denominator({}) == 1);
}

TEST_CASE("polynomial Euclidean identities over F_p, random pairs") {
    std::mt19937 rng(20260822);
    const uint32_t ps[] = {5, 13, 101};
    for (uint32_t p : ps) {
        FpCtx K(p);
        auto random_poly = [&](int maxdeg) {
            int d = static_cast<int>(rng() % (maxdeg + 1));
            std::vector<uint32_t> c(d + 1);
            for (auto& x : c) x = rng() % p;
            return FpPoly(K, c);
        };
        for (int iter = 0; iter < 350; ++iter) {
            FpPoly a = random_poly(8);
            FpPoly b = random_poly(5);
            if (b.is_zero()) {
                CHECK_THROWS_AS(poly_divrem(a, b), DivisionByZeroPoly);
                continue;
            }
            auto [q, r] = poly_divrem(a, b);
            CHECK(poly_add(poly_mul(q, b), r) == a);
            CHECK((r.is_zero() || r.deg() < b.deg()));

            if (a.is_zero()) continue;
            auto [g, u, v] = poly_xgcd(a, b);
            CHECK(poly_add(poly_mul(u, a), poly_mul(v, b)) == g);
            CHECK(poly_mod(a, g).is_zero());
            CHECK(poly_mod(b, g).is_zero());
            CHECK(g == poly_gcd(a, b));
            CHECK(g.is_monic());
        }
    }
}

TEST_CASE("gcd of two zero polynomials is rejected") {
    FpCtx K(7);
    CHECK_THROWS_AS(poly_gcd(poly_zero(K), poly_zero(K)), BothZeroPoly);
    CHECK_THROWS_AS(poly_xgcd(poly_zero(K), poly_zero(K)), BothZeroPoly);
}

TEST_CASE("integer resultants match hand values") {
    // res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
    std::vector<BigInt> f{BigInt(-1), BigInt(0), BigInt(1)};
    std::vector<BigInt> g{BigInt(-2), BigInt(1)};
    CHECK(resultant_int(f, g) == 3);
    // res(x^3 + 1, 3x^2) = 27 (product of 3a^2 over the cube roots of -1)
    std::vector<BigInt> c{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    std::vector<BigInt> d{BigInt(0), BigInt(0), BigInt(3)};
    CHECK(resultant_int(c, d) == 27);
}

TEST_CASE("poly_reduce clears denominators against the prime") {
    std::vector<BigRat> f{BigRat(1, 2), BigRat(3)};
    FpPoly r = poly_reduce(f, 7);
    CHECK(r.coeff(0) == 4);  // 1/2 = 4 mod 7
    CHECK(r.coeff(1) == 3);
    CHECK_THROWS_AS(poly_reduce(f, 2), BadReductionDenominator);
}

TEST_CASE("reversal sends roots to reciprocals") {
    FpCtx K(11);
    FpPoly a(K, {3, 1, 0, 5});  // 5x^3 + x + 3
    FpPoly r = poly_reverse_padded(a, 3);
    for (uint32_t x = 1; x < 11; ++x) {
        uint32_t inv = Fp(11).inv(x);
        uint32_t lhs = r.eval(x);
        uint32_t rhs = Fp(11).mul(Fp(11).pow(x, 3), a.eval(inv));
        CHECK(lhs == rhs);
    }
}
