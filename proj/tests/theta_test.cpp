#include <cstdlib>

#include "doctest.h"
#include "garside/tables.hpp"
#include "garside/theta.hpp"
#include "test_util.hpp"

using namespace garside;
using test::big_vec;

TEST_CASE("the opening coefficients match the published sequence") {
    const auto L = theta_coefficients(7).coefficients;
    CHECK(L == big_vec({1, 1, 2, 4, 9, 21, 52, 133}));
    CHECK(theta_coefficients(1).coefficients == big_vec({1, 1}));
}

TEST_CASE("coefficients are strictly increasing from k = 2 on") {
    const auto L = theta_coefficients(120).coefficients;
    CHECK(L[0] == L[1]);
    for (std::size_t k = 2; k < L.size(); ++k) CHECK(L[k] > L[k - 1]);
}

TEST_CASE("theta column equals limit-table column 1 (delegated route)") {
    const auto L = theta_coefficients(30).coefficients;
    const auto column = build_limit_table_delegated(30, 1).column(1);
    CHECK(L == column);
}

TEST_CASE("newton path agrees with the table recurrence") {
    const auto slow = theta_by_recurrence(240);
    const auto fast = theta_by_newton(240);
    CHECK(slow == fast);
}

TEST_CASE("leading-root identity") {
    CHECK(verify_leading_root(0).ok);
    CHECK(verify_leading_root(30).ok);
    const auto report = verify_leading_root(64);
    CHECK(report.ok);
    CHECK(report.first_failure == -1);

    SUBCASE("an injected fault is pinpointed") {
        auto xi = theta_coefficients(12).coefficients;
        xi[5] += 1;
        const auto bad = verify_leading_root(xi);
        CHECK_FALSE(bad.ok);
        CHECK(bad.first_failure == 5);
    }
}

TEST_CASE("powers of the series reproduce the limit-table columns") {
    CHECK(power_coefficients(1, 7) == theta_coefficients(7).coefficients);
    CHECK(power_coefficients(2, 5) == big_vec({1, 2, 5, 12, 30, 76}));
    CHECK(power_coefficients(3, 4) == big_vec({1, 3, 9, 25, 69}));

    const GrowthTable limit = build_limit_table(25, 6);
    for (int t = 1; t <= 6; ++t) {
        CAPTURE(t);
        CHECK(power_coefficients(t, 25) == limit.column(t));
    }
    CHECK_THROWS_AS(power_coefficients(0, 3), std::invalid_argument);
}

TEST_CASE("ratio estimates") {
    const RatioEstimate at2 = estimate_q_infinity(2);
    CHECK(at2.ratio == "2.0000000000");
    CHECK(at2.numerator == 2);
    CHECK(at2.denominator == 1);

    const RatioEstimate at7 = estimate_q_infinity(7, 4);
    CHECK(at7.numerator == 133);
    CHECK(at7.denominator == 52);
    CHECK(at7.ratio == "2.5576");  // far from the limit, as expected this shallow

    const RatioEstimate at60 = estimate_q_infinity(60, 6);
    const double ratio = std::strtod(at60.ratio.c_str(), nullptr);
    CHECK(ratio > 3.0);
    CHECK(ratio < 3.24);
    const double root = std::strtod(at60.kth_root.c_str(), nullptr);
    CHECK(root > 2.5);
    CHECK(root < ratio);

    CHECK_THROWS_AS(estimate_q_infinity(1), std::invalid_argument);
}
