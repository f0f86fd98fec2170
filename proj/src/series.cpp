#include "garside/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace garside {

CoeffStream::CoeffStream(IntPolynomial denominator) : denominator_(std::move(denominator)) {
    if (denominator_.coeff(0) != 1)
        throw std::invalid_argument("CoeffStream: denominator must have constant term 1");
    coeffs_.emplace_back(1);
}

const BigInt& CoeffStream::at(std::size_t k) {
    extend_to(k);
    return coeffs_[k];
}

void CoeffStream::extend_to(std::size_t k) {
    const std::size_t n = static_cast<std::size_t>(denominator_.degree());
    while (coeffs_.size() <= k) {
        const std::size_t j = coeffs_.size();
        BigInt next(0);
        for (std::size_t i = 1; i <= std::min(j, n); ++i)
            next -= denominator_.coeff(i) * coeffs_[j - i];
        coeffs_.push_back(std::move(next));
    }
}

std::vector<BigInt> invert_series(const IntPolynomial& denominator, std::size_t up_to) {
    CoeffStream stream(denominator);
    stream.extend_to(up_to);
    auto view = stream.coefficients();
    return {view.begin(), view.begin() + static_cast<std::ptrdiff_t>(up_to) + 1};
}

std::vector<BigInt> series_mul_truncated(std::span<const BigInt> a, std::span<const BigInt> b,
                                         std::size_t up_to) {
    std::vector<BigInt> prod(up_to + 1, BigInt(0));
    for (std::size_t i = 0; i < a.size() && i <= up_to; ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax = std::min(b.size(), up_to - i + 1);
        for (std::size_t j = 0; j < jmax; ++j) prod[i + j] += a[i] * b[j];
    }
    return prod;
}

}  // namespace garside
