#include "polycf/rational_function.hpp"

#include <utility>

namespace polycf {

namespace {

BigInt lcm_positive(const BigInt& a, const BigInt& b) {
    BigInt g = boost::multiprecision::gcd(a, b);
    return a / g * b;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) {
        throw DivisionByZeroError("rational function with zero denominator");
    }
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).quotient;
        den_ = Polynomial::divmod(den_, g).quotient;
    }
    // Clear rational coefficients from the denominator, then strip its
    // integer content; the compensating factor moves into the numerator.
    BigInt clear(1);
    for (int k = 0; k <= den_.degree(); ++k) {
        clear = lcm_positive(clear, den_.coeff(k).denominator());
    }
    BigInt content(0);
    for (int k = 0; k <= den_.degree(); ++k) {
        Rational c = den_.coeff(k) * Rational(clear);
        BigInt a = c.numerator() < 0 ? BigInt(-c.numerator()) : c.numerator();
        content = boost::multiprecision::gcd(content, a);
    }
    Rational factor = Rational(clear, content);
    if (den_.leading().sign() < 0) factor = -factor;
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial()) {
        throw OutOfDomainError("rational function is not a polynomial");
    }
    return num_;
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) {
        throw DivisionByZeroError("rational function denominator vanishes");
    }
    return num_.eval(x) / d;
}

Rational RationalFunction::eval_at(std::int64_t n) const {
    Rational x(n);
    Rational d = den_.eval(x);
    if (d.is_zero()) {
        throw PoleError("rule denominator vanishes at n = " + std::to_string(n), n);
    }
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero()) {
        throw DivisionByZeroError("reciprocal of the zero rational function");
    }
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw DivisionByZeroError("rational function division by zero");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    RationalFunction result{Polynomial(Rational(1))};
    RationalFunction base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        if (exponent >>= 1) base = base * base;
    }
    return result;
}

RationalFunction RationalFunction::shifted(std::int64_t k) const {
    return RationalFunction(num_.shifted(k), den_.shifted(k));
}

std::string RationalFunction::to_expression_string() const {
    if (is_polynomial()) return num_.to_expression_string();
    return "(" + num_.to_expression_string() + ")/(" + den_.to_expression_string() + ")";
}

RationalFunction ratfun_multiply(const RationalFunction& a, const RationalFunction& b) {
    return a * b;
}

RationalFunction shift_index(const RationalFunction& f, std::int64_t k) {
    return f.shifted(k);
}

}  // namespace polycf
