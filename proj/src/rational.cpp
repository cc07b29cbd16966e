#include "polycf/rational.hpp"

#include <ostream>
#include <utility>

namespace polycf {

namespace {

BigInt gcd_positive(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd_positive(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.num_ = num_ < 0 ? BigInt(-num_) : num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw DivisionByZeroError("reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational Rational::pow(long long exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    // Reduced base stays reduced under squaring, so no re-normalization cost.
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        throw DivisionByZeroError("rational division by zero");
    }
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string Rational::to_fraction_string() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t digits_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == digits_start) {
        throw Error("invalid rational literal: '" + text + "'");
    }
    BigInt num = bigint_from_digits(text.substr(digits_start, i - digits_start));
    BigInt den(1);
    if (i < text.size()) {
        if (text[i] != '/') {
            throw Error("invalid rational literal: '" + text + "'");
        }
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_start || i != text.size()) {
            throw Error("invalid rational literal: '" + text + "'");
        }
        den = bigint_from_digits(text.substr(den_start, i - den_start));
    }
    if (negative) num = -num;
    return Rational(num, den);
}

Rational rat_normalize(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

BigInt bigint_from_digits(const std::string& digits) {
    if (digits.empty()) {
        throw Error("empty digit string");
    }
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    const std::string trimmed = digits.substr(first);
    if (trimmed.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("invalid digit string: '" + digits + "'");
    }
    return BigInt(trimmed);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace polycf
