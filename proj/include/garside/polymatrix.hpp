#pragma once

#include <cstddef>
#include <vector>

#include "garside/polynomial.hpp"

namespace garside {

// Square matrix of integer polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t order)
        : order_(order), entries_(order * order) {}

    std::size_t order() const { return order_; }
    IntPolynomial& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
    const IntPolynomial& at(std::size_t row, std::size_t col) const {
        return entries_[row * order_ + col];
    }

private:
    std::size_t order_;
    std::vector<IntPolynomial> entries_;
};

// Exact determinant. Cofactor expansion up to order 4, fraction-free
// Bareiss elimination above that (no rational intermediates).
IntPolynomial determinant(const PolyMatrix& m);

}  // namespace garside
