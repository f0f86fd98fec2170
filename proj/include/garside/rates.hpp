#pragma once

#include <string>
#include <vector>

#include "garside/bigint.hpp"
#include "garside/polynomial.hpp"
#include "garside/presentations.hpp"

namespace garside {

// Isolating interval for the smallest positive real root of a Moebius
// polynomial, as dyadic rationals lo/2^scale <= root <= hi/2^scale, plus the
// growth rate rho = 1/root. When the root is hit exactly (A1, B1, D2, I2(2)
// all have root 1) the interval is the degenerate [root, root].
struct RateEstimate {
    MonoidSpec spec;
    BigInt root_lo;
    BigInt root_hi;
    int scale = 0;
    bool exact = false;
    int precision_bits = 0;
    std::string rho;  // decimal rendering of 1/root at matching precision

    std::string root_lo_decimal() const;
    std::string root_hi_decimal() const;
    mpq_class root_lower() const;
    mpq_class root_upper() const;
    mpq_class rho_lower() const;  // 2^scale / root_hi
    mpq_class rho_upper() const;  // 2^scale / root_lo
};

// Bisection on exact dyadic rationals from the seed bracket (0, 1 - 2^-j):
// the Moebius polynomial is 1 at t = 0 and the smallest positive root lies in
// (0, 1]; the interval narrows until hi - lo <= 2^-precision_bits with a
// strict sign change maintained at every step.
RateEstimate growth_rate(const MonoidSpec& spec, int precision_bits);
RateEstimate growth_rate_of(const IntPolynomial& moebius, const MonoidSpec& spec,
                            int precision_bits);

// rho_{A_1}..rho_{A_nmax}; throws if the computed brackets could witness a
// decrease (the sequence is non-decreasing). Families B and D are exposed as
// exploratory sequences with no asserted limit.
std::vector<RateEstimate> rho_sequence(Family family, int n_max, int precision_bits);

}  // namespace garside
