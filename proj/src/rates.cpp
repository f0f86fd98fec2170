#include "garside/rates.hpp"

#include <stdexcept>

#include "garside/moebius.hpp"

namespace garside {

namespace {

BigInt two_pow(int e) { return BigInt(1) << e; }

int eval_sign(const IntPolynomial& p, const BigInt& num, const BigInt& den) {
    return sgn(p.eval_homogeneous(num, den));
}

unsigned decimals_for_bits(int bits) {
    const int d = static_cast<int>(bits * 0.30103);
    return static_cast<unsigned>(d < 1 ? 1 : d);
}

}  // namespace

std::string RateEstimate::root_lo_decimal() const {
    return decimal_ratio(root_lo, two_pow(scale), static_cast<unsigned>(scale));
}

std::string RateEstimate::root_hi_decimal() const {
    return decimal_ratio(root_hi, two_pow(scale), static_cast<unsigned>(scale));
}

mpq_class RateEstimate::root_lower() const {
    mpq_class q(root_lo, two_pow(scale));
    q.canonicalize();
    return q;
}

mpq_class RateEstimate::root_upper() const {
    mpq_class q(root_hi, two_pow(scale));
    q.canonicalize();
    return q;
}

mpq_class RateEstimate::rho_lower() const {
    mpq_class q(two_pow(scale), root_hi);
    q.canonicalize();
    return q;
}

mpq_class RateEstimate::rho_upper() const {
    if (root_lo == 0) throw std::logic_error("rho_upper: unbounded bracket");
    mpq_class q(two_pow(scale), root_lo);
    q.canonicalize();
    return q;
}

RateEstimate growth_rate_of(const IntPolynomial& moebius, const MonoidSpec& spec,
                            int precision_bits) {
    if (precision_bits < 1) throw std::invalid_argument("growth_rate: need precision_bits >= 1");
    if (moebius.coeff(0) != 1)
        throw std::invalid_argument("growth_rate: Moebius polynomial must have constant term 1");

    RateEstimate est;
    est.spec = spec;
    est.precision_bits = precision_bits;
    const unsigned decimals = decimals_for_bits(precision_bits);

    // Seed the bracket: H(0) = 1 > 0, probe dyadic points below 1 for a sign
    // change. Roots of valid specs are either well inside (0,1) or exactly 1.
    int scale = 0;
    BigInt hi;
    bool bracketed = false;
    for (int j = 1; j <= 64 && !bracketed; j = j < 4 ? j + 1 : j * 2) {
        const BigInt num = two_pow(j) - 1;
        if (eval_sign(moebius, num, two_pow(j)) < 0) {
            scale = j;
            hi = num;
            bracketed = true;
        }
    }
    if (!bracketed) {
        if (moebius.eval_homogeneous(1, 1) == 0) {
            est.root_lo = est.root_hi = 1;
            est.scale = 0;
            est.exact = true;
            est.rho = decimal_ratio(1, 1, decimals);
            return est;
        }
        throw std::domain_error("growth_rate: no sign change in (0,1] — malformed polynomial");
    }

    BigInt lo(0);
    // Narrow until the width (hi - lo)/2^scale drops below 2^-precision_bits,
    // and lo has moved off 0 so rho is finite.
    auto narrow_enough = [&] {
        return scale >= precision_bits && lo > 0 &&
               hi - lo <= two_pow(scale - precision_bits);
    };
    while (!narrow_enough()) {
        lo <<= 1;
        hi <<= 1;
        ++scale;
        const BigInt mid = (lo + hi) / 2;
        const int s = eval_sign(moebius, mid, two_pow(scale));
        if (s == 0) {
            est.root_lo = est.root_hi = mid;
            est.scale = scale;
            est.exact = true;
            est.rho = decimal_ratio(two_pow(scale), mid, decimals);
            return est;
        }
        if (s > 0)
            lo = mid;
        else
            hi = mid;
    }

    est.root_lo = lo;
    est.root_hi = hi;
    est.scale = scale;
    est.rho = decimal_ratio(two_pow(scale + 1), lo + hi, decimals);
    return est;
}

RateEstimate growth_rate(const MonoidSpec& spec, int precision_bits) {
    return growth_rate_of(moebius_polynomial(spec).polynomial, spec, precision_bits);
}

std::vector<RateEstimate> rho_sequence(Family family, int n_max, int precision_bits) {
    if (family != Family::A && family != Family::B && family != Family::D)
        throw std::invalid_argument("rho_sequence: families A, B, D only");
    const int n_min = family == Family::D ? 2 : 1;
    if (n_max < n_min) throw std::invalid_argument("rho_sequence: n_max below family minimum");

    std::vector<RateEstimate> out;
    for (int n = n_min; n <= n_max; ++n) {
        const MonoidSpec spec = MonoidSpec::make(family, n);
        out.push_back(growth_rate_of(moebius_by_recurrence(spec).polynomial, spec, precision_bits));
    }
    if (family == Family::A) {
        for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i].rho_upper() < out[i - 1].rho_lower())
                throw std::logic_error("rho_sequence: brackets witness a decrease in rho_{A_n}");
    }
    return out;
}

}  // namespace garside
