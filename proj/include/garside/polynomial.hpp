#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "garside/bigint.hpp"

namespace garside {

// Dense univariate polynomial over the exact integers, indexed by exponent.
// Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial stores nothing and reports degree() == -1 (the -infinity
// sentinel; all real degrees are >= 0).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, std::size_t exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& coeff(std::size_t exponent) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial& rhs) const = default;

    // this * t^shift
    IntPolynomial shifted(std::size_t shift) const;

    // Exact quotient this / divisor in Z[t]; throws std::domain_error if the
    // division leaves a remainder. Used by the fraction-free determinant,
    // where exactness is guaranteed.
    IntPolynomial exact_div(const IntPolynomial& divisor) const;

    // den^degree * p(num/den); its sign is the sign of p at the rational
    // point num/den when den > 0.
    BigInt eval_homogeneous(const BigInt& num, const BigInt& den) const;

    // Text form with ascending exponents and explicit signs: "1 - 2*t + t^3".
    std::string to_string() const;

    // Coefficients as decimal strings (index = exponent), for JSON output.
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace garside
