#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace garside {

// Exact integers throughout; counts grow like 3.23^k and must stay exact.
using BigInt = mpz_class;

// k(k-1)/2, defined for every k >= 0 (so binom2(0) == binom2(1) == 0).
inline std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

inline BigInt pow10(unsigned digits) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Fixed-point rendering of num/den (den > 0) with the given number of decimal
// places, truncated toward zero.
std::string decimal_ratio(const BigInt& num, const BigInt& den, unsigned decimals);

}  // namespace garside
