#include <random>

#include "doctest.h"
#include "garside/series.hpp"
#include "test_util.hpp"

using namespace garside;
using test::big_vec;
using test::make_poly;

TEST_CASE("invert_series: worked examples") {
    // 1/(1 - 2t + t^3): element counts of the three-atom braid monoid
    CHECK(invert_series(make_poly({{0, 1}, {1, -2}, {3, 1}}), 6) ==
          big_vec({1, 2, 4, 7, 12, 20, 33}));
    // geometric series
    CHECK(invert_series(make_poly({{0, 1}, {1, -1}}), 4) == big_vec({1, 1, 1, 1, 1}));
    // 1/(1 - 2t + t^4)
    CHECK(invert_series(make_poly({{0, 1}, {1, -2}, {4, 1}}), 5) ==
          big_vec({1, 2, 4, 8, 15, 28}));
}

TEST_CASE("invert_series rejects denominators without unit constant term") {
    CHECK_THROWS_AS(invert_series(make_poly({{0, 2}, {1, 1}}), 3), std::invalid_argument);
    CHECK_THROWS_AS(invert_series(make_poly({{1, 1}}), 3), std::invalid_argument);
}

TEST_CASE("stream extension is idempotent") {
    CoeffStream stream(make_poly({{0, 1}, {1, -2}, {3, 1}}));
    CHECK(stream.at(3) == 7);
    const BigInt alpha2 = stream.at(2);
    stream.extend_to(20);
    CHECK(stream.at(2) == alpha2);
    CHECK(stream.at(3) == 7);
    CHECK(stream.computed() == 21);
}

TEST_CASE("inverse convolved with denominator gives 1") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BigInt> den(1 + static_cast<std::size_t>(rng() % 7), BigInt(0));
        den[0] = 1;
        for (std::size_t i = 1; i < den.size(); ++i) den[i] = coeff(rng);
        const IntPolynomial p(std::move(den));
        const auto inv = invert_series(p, 25);
        const auto conv = series_mul_truncated(inv, p.coefficients(), 25);
        CHECK(conv[0] == 1);
        for (std::size_t k = 1; k <= 25; ++k) CHECK(conv[k] == 0);
    }
}

TEST_CASE("truncated product: identities and the theta square") {
    const auto a = big_vec({1, 1, 2});
    CHECK(series_mul_truncated(a, big_vec({1}), 2) == big_vec({1, 1, 2}));
    CHECK(series_mul_truncated(big_vec({1, 1}), big_vec({1, 1}), 2) == big_vec({1, 2, 1}));
    // xi_0^2 through degree 3, from the first four theta coefficients
    CHECK(series_mul_truncated(big_vec({1, 1, 2, 4}), big_vec({1, 1, 2, 4}), 3) ==
          big_vec({1, 2, 5, 12}));
}
