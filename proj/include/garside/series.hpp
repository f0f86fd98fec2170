#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "garside/polynomial.hpp"

namespace garside {

// Coefficient stream of 1/denominator, for a denominator with constant
// term 1. Coefficients satisfy alpha_k = -sum_{i=1..min(k,N)} c_i alpha_{k-i}
// with alpha_0 = 1, so extending the stream never changes earlier entries.
class CoeffStream {
public:
    explicit CoeffStream(IntPolynomial denominator);

    const IntPolynomial& denominator() const { return denominator_; }
    std::size_t computed() const { return coeffs_.size(); }

    // Extends the cache through index k and returns alpha_k.
    const BigInt& at(std::size_t k);
    void extend_to(std::size_t k);

    // View of alpha_0..alpha_{computed-1}. Invalidated by extension.
    std::span<const BigInt> coefficients() const { return coeffs_; }

private:
    IntPolynomial denominator_;
    std::vector<BigInt> coeffs_;
};

// alpha_0..alpha_k of 1/denominator.
std::vector<BigInt> invert_series(const IntPolynomial& denominator, std::size_t up_to);

// Cauchy product of two coefficient lists, truncated at degree up_to.
std::vector<BigInt> series_mul_truncated(std::span<const BigInt> a, std::span<const BigInt> b,
                                         std::size_t up_to);

}  // namespace garside
