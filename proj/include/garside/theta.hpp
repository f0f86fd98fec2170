#pragma once

#include <span>
#include <string>
#include <vector>

#include "garside/bigint.hpp"

namespace garside {

// Coefficients L_0, L_1, ... of xi_0(y) = -x_0(y), where x_0 is the leading
// root of the partial theta function f(x, y) = sum_k y^C(k,2) x^k. L_k also
// counts the length-k elements of the infinite-strand braid monoid whose
// lex-representative starts with the first atom.
struct ThetaSeries {
    std::vector<BigInt> coefficients;  // index k -> L_k
};

// Exact L_0..L_K. Small depths run the stabilized-table recurrence directly;
// large depths switch to a Newton solver for f(-xi, y) = 0 on packed
// integers. Both paths agree coefficient-for-coefficient.
ThetaSeries theta_coefficients(int max_k);

// The two routes, exposed for cross-checking.
std::vector<BigInt> theta_by_recurrence(int max_k);
std::vector<BigInt> theta_by_newton(int max_k);

struct LeadingRootReport {
    bool ok = false;
    int first_failure = -1;  // lowest y-degree with a nonzero coefficient
};

// Substitutes the truncated series into the partial theta function and
// checks that every coefficient through y^K vanishes.
LeadingRootReport verify_leading_root(int max_k);
LeadingRootReport verify_leading_root(std::span<const BigInt> xi);

// Coefficients of xi_0(y)^t through y^K; equals limit-table column t.
std::vector<BigInt> power_coefficients(int t, int max_k);

struct RatioEstimate {
    int depth = 0;             // K
    BigInt numerator;          // L_K
    BigInt denominator;        // L_{K-1}
    std::string ratio;         // L_K / L_{K-1}, fixed-point decimal
    std::string kth_root;      // L_K^(1/K), fixed-point decimal
};

// Ratio estimate of the growth constant at depth K; an estimate, not the
// constant itself.
RatioEstimate estimate_q_infinity(int depth, unsigned decimals = 10);

// Reference digits 3.2336366652 used by the convergence diagnostics.
const std::string& q_infinity_reference_digits();

}  // namespace garside
