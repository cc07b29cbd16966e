#include "polycf/polynomial.hpp"

#include <utility>

namespace polycf {

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    trim();
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(Rational coeff, int power) {
    if (power < 0) {
        throw OutOfDomainError("monomial power must be nonnegative");
    }
    Polynomial p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(power + 1, Rational());
        p.coeffs_[power] = std::move(coeff);
    }
    return p;
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational();
    return coeffs_[k];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

Rational Polynomial::constant_term() const {
    return coeffs_.empty() ? Rational() : coeffs_.front();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    p.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        p.coeffs_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    p.trim();
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    p.trim();
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial p = *this;
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) {
        throw OutOfDomainError("polynomial power must be nonnegative");
    }
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        if (exponent >>= 1) base = base * base;
    }
    return result;
}

Polynomial Polynomial::shifted(std::int64_t k) const {
    // Horner in (n + k): acc(n + k) collapses back to a polynomial in n.
    Polynomial shift_base({Rational(k), Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * shift_base + Polynomial(*it);
    }
    return acc;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw DivisionByZeroError("polynomial division by zero");
    }
    Polynomial rem = num;
    Polynomial quot;
    Rational den_lead = den.leading();
    int dden = den.degree();
    while (!rem.is_zero() && rem.degree() >= dden) {
        int k = rem.degree() - dden;
        Rational c = rem.leading() / den_lead;
        quot = quot + monomial(c, k);
        rem = rem - den.scaled(c) * monomial(Rational(1), k);
    }
    return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().reciprocal());
}

std::string Polynomial::to_expression_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        bool first = out.empty();
        if (first) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        Rational mag = c.abs();
        if (k == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += "n";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace polycf
