#include "garside/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace garside {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t exponent) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(exponent + 1, BigInt(0));
        p.coeffs_[exponent] = std::move(c);
    }
    return p;
}

const BigInt& IntPolynomial::coeff(std::size_t exponent) const {
    static const BigInt kZero(0);
    return exponent < coeffs_.size() ? coeffs_[exponent] : kZero;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    std::vector<BigInt> prod(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(prod));
}

IntPolynomial IntPolynomial::shifted(std::size_t shift) const {
    if (is_zero() || shift == 0) return *this;
    IntPolynomial r;
    r.coeffs_.assign(shift, BigInt(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (is_zero()) return IntPolynomial{};
    if (degree() < divisor.degree()) throw std::domain_error("exact_div: not divisible");
    std::vector<BigInt> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    std::vector<BigInt> quot(rem.size() - d.size() + 1, BigInt(0));
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        BigInt& top = rem[qi + d.size() - 1];
        if (top == 0) continue;
        BigInt q;
        BigInt r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        if (r != 0) throw std::domain_error("exact_div: not divisible");
        quot[qi] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[qi + j] -= q * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("exact_div: not divisible");
    return IntPolynomial(std::move(quot));
}

BigInt IntPolynomial::eval_homogeneous(const BigInt& num, const BigInt& den) const {
    if (is_zero()) return BigInt(0);
    BigInt result(0);
    BigInt den_pow(1);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        result = result * num + coeffs_[i] * den_pow;
        if (i > 0) den_pow *= den;
    }
    return result;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const BigInt& c = coeffs_[e];
        if (c == 0) continue;
        const BigInt a(abs(c));
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << a.get_str(10);
        } else {
            if (a != 1) out << a.get_str(10) << "*";
            out << "t";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str(10));
    return out;
}

}  // namespace garside
