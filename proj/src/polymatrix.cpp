#include "garside/polymatrix.hpp"

#include <stdexcept>
#include <utility>

namespace garside {

namespace {

IntPolynomial cofactor_det(const PolyMatrix& m, std::vector<std::size_t> cols, std::size_t row) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    IntPolynomial det;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m.at(row, cols[k]).is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        IntPolynomial minor = cofactor_det(m, std::move(rest), row + 1);
        IntPolynomial term = m.at(row, cols[k]) * minor;
        if (k % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

IntPolynomial bareiss_det(PolyMatrix m) {
    const std::size_t n = m.order();
    int sign = 1;
    IntPolynomial prev = IntPolynomial::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return IntPolynomial::zero();
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPolynomial num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.exact_div(prev);
            }
            m.at(i, k) = IntPolynomial::zero();
        }
        prev = m.at(k, k);
    }
    IntPolynomial det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace

IntPolynomial determinant(const PolyMatrix& m) {
    if (m.order() == 0) throw std::invalid_argument("determinant: order must be >= 1");
    if (m.order() == 1) return m.at(0, 0);
    if (m.order() <= 4) {
        std::vector<std::size_t> cols(m.order());
        for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
        return cofactor_det(m, std::move(cols), 0);
    }
    return bareiss_det(m);
}

}  // namespace garside
