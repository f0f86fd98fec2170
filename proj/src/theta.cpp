#include "garside/theta.hpp"

#include <stdexcept>

#include "garside/series.hpp"
#include "garside/tables.hpp"

namespace garside {

namespace {
// Above this depth the quadratic table recurrence loses to the Newton path.
constexpr int kRecurrenceCutoff = 600;
}  // namespace

std::vector<BigInt> theta_by_recurrence(int max_k) {
    if (max_k < 0) throw std::invalid_argument("theta_by_recurrence: need K >= 0");
    return build_limit_table(max_k, 1).column(1);
}

ThetaSeries theta_coefficients(int max_k) {
    if (max_k < 0) throw std::invalid_argument("theta_coefficients: need K >= 0");
    if (max_k <= kRecurrenceCutoff) return {theta_by_recurrence(max_k)};
    return {theta_by_newton(max_k)};
}

LeadingRootReport verify_leading_root(int max_k) {
    const auto xi = theta_coefficients(max_k).coefficients;
    return verify_leading_root(xi);
}

LeadingRootReport verify_leading_root(std::span<const BigInt> xi) {
    if (xi.empty()) return {true, -1};
    const int len = static_cast<int>(xi.size());

    // f(-xi, y) = sum_r (-1)^r y^C(r,2) xi^r, evaluated bottom-up through the
    // cascade G_r = 1 - y^r xi G_{r+1}; the full sum is G_0.
    int top = 0;
    while (binom2(top + 1) < len) ++top;
    std::vector<BigInt> tail{BigInt(1)};
    for (int r = top - 1; r >= 0; --r) {
        const int need = len - static_cast<int>(binom2(r));  // length of G_r
        const int prod_len = need - r;                       // length of xi * G_{r+1}
        std::vector<BigInt> next(static_cast<std::size_t>(need), BigInt(0));
        next[0] = 1;
        if (prod_len > 0) {
            auto prod = series_mul_truncated(xi, tail, static_cast<std::size_t>(prod_len) - 1);
            for (int j = 0; j < prod_len; ++j) next[static_cast<std::size_t>(j + r)] -= prod[static_cast<std::size_t>(j)];
        }
        tail = std::move(next);
    }
    for (int k = 0; k < len; ++k)
        if (tail[static_cast<std::size_t>(k)] != 0) return {false, k};
    return {true, -1};
}

std::vector<BigInt> power_coefficients(int t, int max_k) {
    if (t < 1) throw std::invalid_argument("power_coefficients: need t >= 1");
    if (max_k < 0) throw std::invalid_argument("power_coefficients: need K >= 0");
    const auto xi = theta_coefficients(max_k).coefficients;
    std::vector<BigInt> acc = xi;
    for (int e = 1; e < t; ++e)
        acc = series_mul_truncated(acc, xi, static_cast<std::size_t>(max_k));
    return acc;
}

RatioEstimate estimate_q_infinity(int depth, unsigned decimals) {
    if (depth < 2) throw std::invalid_argument("estimate_q_infinity: need K >= 2");
    const auto xi = theta_coefficients(depth).coefficients;
    RatioEstimate est;
    est.depth = depth;
    est.numerator = xi[static_cast<std::size_t>(depth)];
    est.denominator = xi[static_cast<std::size_t>(depth) - 1];
    est.ratio = decimal_ratio(est.numerator, est.denominator, decimals);

    // floor((L_K * 10^(K*d))^(1/K)) = floor(L_K^(1/K) * 10^d)
    BigInt scaled = est.numerator * pow10(decimals * static_cast<unsigned>(depth));
    BigInt root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(depth));
    est.kth_root = decimal_ratio(root, pow10(decimals), decimals);
    return est;
}

const std::string& q_infinity_reference_digits() {
    static const std::string digits = "3.2336366652";
    return digits;
}

}  // namespace garside
