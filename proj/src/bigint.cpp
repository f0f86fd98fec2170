#include "garside/bigint.hpp"

#include <stdexcept>

namespace garside {

std::string decimal_ratio(const BigInt& num, const BigInt& den, unsigned decimals) {
    if (sgn(den) <= 0) throw std::invalid_argument("decimal_ratio: denominator must be positive");
    BigInt scaled_num = num * pow10(decimals);
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
    bool negative = sgn(q) < 0;
    std::string digits = BigInt(abs(q)).get_str(10);
    if (decimals == 0) return (negative ? "-" : "") + digits;
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
    return (negative ? "-" : "") + digits;
}

}  // namespace garside
