#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "garside/moebius.hpp"
#include "garside/rates.hpp"
#include "garside/series.hpp"

using namespace garside;

TEST_CASE("degenerate roots at 1: A1, B1, D2, I2(2)") {
    for (const char* name : {"A1", "B1", "D2", "I2(2)"}) {
        CAPTURE(name);
        const RateEstimate est = growth_rate(MonoidSpec::parse(name), 40);
        CHECK(est.exact);
        CHECK(est.root_lo == est.root_hi);
        CHECK(est.root_lower() == 1);
        CHECK(est.rho.substr(0, 2) == "1.");
    }
}

TEST_CASE("A2: rho is the golden ratio") {
    const RateEstimate est = growth_rate(MonoidSpec::parse("A2"), 45);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double rho = std::strtod(est.rho.c_str(), nullptr);
    CHECK(std::abs(rho - phi) < 1e-9);
    // 1 - 2t + t^3 = (1 - t)(1 - t - t^2); the smallest positive root is
    // (sqrt(5) - 1)/2 = 0.6180339887...
    const double root = std::strtod(est.root_lo_decimal().c_str(), nullptr);
    CHECK(std::abs(root - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-10);
}

TEST_CASE("bracket soundness: sign change and width") {
    for (const char* name : {"A2", "A5", "B4", "D5", "E7", "H4", "I2(9)"}) {
        CAPTURE(name);
        const MonoidSpec spec = MonoidSpec::parse(name);
        const IntPolynomial poly = moebius_polynomial(spec).polynomial;
        const RateEstimate est = growth_rate(spec, 50);
        REQUIRE_FALSE(est.exact);
        const BigInt den = BigInt(1) << est.scale;
        CHECK(sgn(poly.eval_homogeneous(est.root_lo, den)) > 0);
        CHECK(sgn(poly.eval_homogeneous(est.root_hi, den)) < 0);
        CHECK(est.root_hi - est.root_lo <= BigInt(1) << (est.scale - 50));
        CHECK(est.root_lo > 0);
        CHECK(mpq_class(est.root_upper()) <= 1);
    }
}

TEST_CASE("I2(p) for large p pushes rho toward 2") {
    // The root of 1 - 2t + t^50 sits 2^-51 above 1/2, so certifying rho < 2
    // needs a bracket narrower than that.
    const RateEstimate est = growth_rate(MonoidSpec::parse("I2(50)"), 64);
    CHECK(est.rho_lower() > mpq_class(199, 100));
    CHECK(est.rho_upper() < 2);
}

TEST_CASE("rho sequence for A: nondecreasing and below the reference constant") {
    const auto rates = rho_sequence(Family::A, 9, 45);
    REQUIRE(rates.size() == 9);
    CHECK(rates[0].exact);
    CHECK(rates[0].root_lower() == 1);

    const mpq_class bound(BigInt("32336376652"), pow10(10));  // reference + 1e-6
    for (const auto& est : rates) {
        if (!est.exact) CHECK(est.rho_upper() < bound);
    }
    for (std::size_t i = 1; i < rates.size(); ++i) {
        const mpq_class prev_lo = rates[i - 1].exact ? mpq_class(1) : rates[i - 1].rho_lower();
        const mpq_class next_hi = rates[i].exact ? mpq_class(1) : rates[i].rho_upper();
        CHECK(next_hi >= prev_lo);
    }
}

TEST_CASE("empirical count ratios approach rho") {
    for (Family family : {Family::A, Family::B, Family::D}) {
        const int lo = family == Family::D ? 2 : 1;
        for (int n = lo; n <= 5; ++n) {
            const MonoidSpec spec = MonoidSpec::make(family, n);
            CAPTURE(spec.to_string());
            const RateEstimate est = growth_rate(spec, 50);
            const auto alpha = invert_series(moebius_polynomial(spec).polynomial, 201);
            const mpq_class ratio(alpha[201], alpha[200]);
            const mpq_class mid = (est.rho_lower() + est.rho_upper()) / 2;
            mpq_class gap = ratio - mid;
            if (gap < 0) gap = -gap;
            CHECK(gap < mpq_class(1, 100));
        }
    }
    // the degenerate D2 = Z x Z grows linearly: alpha ratios crawl to 1
    const auto alpha = invert_series(moebius_polynomial(MonoidSpec::parse("D2")).polynomial, 201);
    CHECK(alpha[200] == 201);
}

TEST_CASE("a polynomial with no root in (0,1] is rejected") {
    // 1 + t: positive on all of (0,1], so no bracket can be seeded
    std::vector<BigInt> coeffs{BigInt(1), BigInt(1)};
    CHECK_THROWS_AS(growth_rate_of(IntPolynomial(coeffs), MonoidSpec::parse("A1"), 30),
                    std::domain_error);
}

TEST_CASE("exploratory B and D sequences stay below the reference") {
    const mpq_class bound(BigInt("32336376652"), pow10(10));
    for (const auto& est : rho_sequence(Family::B, 7, 40))
        if (!est.exact) CHECK(est.rho_upper() < bound);
    for (const auto& est : rho_sequence(Family::D, 7, 40))
        if (!est.exact) CHECK(est.rho_upper() < bound);
}
