#include <qident/qbinom.hpp>

#include <qident/identities.hpp>

#include <doctest.h>

#include <stdexcept>

#include "test_helpers.hpp"

using qident::choose2;
using qident::gauss_binomial;
using qident::gauss_binomial_dilated;
using qident::IntPoly;
using qident::QBinomArgs;
using qident::testing::qbinom_product_oracle;

TEST_CASE("frozen small values") {
    CHECK(gauss_binomial(0, 0) == IntPoly::constant(1));
    CHECK(gauss_binomial(5, 0) == IntPoly::constant(1));
    CHECK(gauss_binomial(5, 5) == IntPoly::constant(1));
    CHECK(gauss_binomial(2, 1) == IntPoly::parse("1 + q"));
    CHECK(gauss_binomial(3, 2) == IntPoly::parse("1 + q + q^2"));
    CHECK(gauss_binomial(4, 2) == IntPoly::parse("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(gauss_binomial(5, 2) == IntPoly::parse("1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6"));
}

TEST_CASE("out of range gives zero, bad upper throws") {
    CHECK(gauss_binomial(3, -1).is_zero());
    CHECK(gauss_binomial(3, 4).is_zero());
    CHECK(gauss_binomial(0, 1).is_zero());
    CHECK_THROWS_AS(gauss_binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_binomial(-5, -5), std::invalid_argument);
}

TEST_CASE("agrees with the product formula") {
    for (int n = 0; n <= 20; ++n)
        for (int k = -1; k <= n + 2; ++k)
            CHECK(gauss_binomial(n, std::max(k, -1)) == qbinom_product_oracle(n, std::max(k, -1)));
}

TEST_CASE("pascal recurrence") {
    for (int n = 1; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) {
            IntPoly expected = gauss_binomial(n - 1, k) +
                               IntPoly::monomial(1, n - k) * gauss_binomial(n - 1, k - 1);
            CHECK(gauss_binomial(n, k) == expected);
        }
}

TEST_CASE("symmetry and degree") {
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) {
            IntPoly p = gauss_binomial(n, k);
            CHECK(p == gauss_binomial(n, n - k));
            REQUIRE(p.degree().has_value());
            CHECK(*p.degree() == static_cast<long>(k) * (n - k));
            for (const auto& c : p.coeffs()) CHECK(c >= 0);
        }
}

TEST_CASE("specializes to the binomial coefficient at q = 1") {
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(gauss_binomial(n, k).eval(1) == qident::binom(n, k));
}

TEST_CASE("dilated values") {
    CHECK(gauss_binomial_dilated(2, 1, 2) == IntPoly::parse("1 + q^2"));
    CHECK(gauss_binomial_dilated(3, 2, 3) == IntPoly::parse("1 + q^3 + q^6"));
    CHECK(gauss_binomial_dilated(5, -2, 4).is_zero());
    CHECK(gauss_binomial_dilated(5, 7, 4).is_zero());
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(gauss_binomial_dilated(n, k, 1) == gauss_binomial(n, k));
            CHECK(gauss_binomial_dilated(n, k, 2) == gauss_binomial(n, k).dilate(2));
        }
    CHECK_THROWS_AS(gauss_binomial_dilated(3, 1, 0), std::invalid_argument);
}

TEST_CASE("argument bundle form") {
    CHECK(gauss_binomial(QBinomArgs{4, 2, 1}) == gauss_binomial(4, 2));
    CHECK(gauss_binomial(QBinomArgs{4, 2, 2}) == gauss_binomial_dilated(4, 2, 2));
    CHECK(gauss_binomial(QBinomArgs{}) == IntPoly::constant(1));
}

TEST_CASE("choose2") {
    CHECK(choose2(0) == 0);
    CHECK(choose2(1) == 0);
    CHECK(choose2(2) == 1);
    CHECK(choose2(4) == 6);
    CHECK(choose2(13) == 78);
    CHECK_THROWS_AS(choose2(-1), std::invalid_argument);
}
