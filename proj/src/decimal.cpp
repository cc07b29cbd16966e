#include "polycf/decimal.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace polycf {

namespace {

int digits10(const BigInt& value) {
    if (value == 0) return 1;
    std::string s = value.str();
    return static_cast<int>(s.size()) - (s[0] == '-' ? 1 : 0);
}

bool is_power_of_ten(const BigInt& value) {
    BigInt v = value < 0 ? BigInt(-value) : value;
    if (v == 0) return false;
    while (v % 10 == 0) v /= 10;
    return v == 1;
}

}  // namespace

BigInt pow10(int k) {
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
}

BigInt round_div_half_away(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZeroError("rounded division by zero");
    }
    BigInt an = num < 0 ? BigInt(-num) : num;
    BigInt ad = den < 0 ? BigInt(-den) : den;
    BigInt q = an / ad;
    BigInt r = an % ad;
    if (2 * r >= ad) ++q;
    bool negative = (num < 0) != (den < 0);
    return negative ? BigInt(-q) : q;
}

HighPrecisionDecimal HighPrecisionDecimal::from_mantissa(BigInt mantissa, int scale) {
    if (scale < 0) {
        throw OutOfDomainError("decimal scale must be nonnegative");
    }
    return HighPrecisionDecimal(std::move(mantissa), scale, scale);
}

HighPrecisionDecimal HighPrecisionDecimal::from_int(long long value) {
    return HighPrecisionDecimal(BigInt(value), 0, 0);
}

HighPrecisionDecimal HighPrecisionDecimal::parse(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long long scale = 0;
    bool seen_digit = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        digits += text[i];
        seen_digit = true;
        ++i;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            digits += text[i];
            ++scale;
            seen_digit = true;
            ++i;
        }
    }
    if (!seen_digit) {
        throw Error("invalid decimal literal: '" + text + "'");
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i == text.size()) {
            throw Error("invalid decimal literal: '" + text + "'");
        }
        long long exponent = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            exponent = exponent * 10 + (text[i] - '0');
            if (exponent > 1000000) {
                throw Error("decimal exponent out of range: '" + text + "'");
            }
            ++i;
        }
        scale += exp_negative ? exponent : -exponent;
    }
    if (i != text.size()) {
        throw Error("invalid decimal literal: '" + text + "'");
    }
    BigInt mantissa = bigint_from_digits(digits.empty() ? "0" : digits);
    if (scale < 0) {
        mantissa *= pow10(static_cast<int>(-scale));
        scale = 0;
    }
    if (negative) mantissa = -mantissa;
    return HighPrecisionDecimal(std::move(mantissa), static_cast<int>(scale),
                                static_cast<int>(scale));
}

HighPrecisionDecimal HighPrecisionDecimal::operator-() const {
    return HighPrecisionDecimal(BigInt(-mantissa_), scale_, precision_digits_);
}

HighPrecisionDecimal HighPrecisionDecimal::abs() const {
    return mantissa_ < 0 ? -(*this) : *this;
}

HighPrecisionDecimal operator+(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
    int scale = std::max(a.scale_, b.scale_);
    BigInt ma = a.mantissa_ * pow10(scale - a.scale_);
    BigInt mb = b.mantissa_ * pow10(scale - b.scale_);
    return HighPrecisionDecimal(ma + mb, scale,
                                std::min(a.precision_digits_, b.precision_digits_));
}

HighPrecisionDecimal operator-(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
    return a + (-b);
}

HighPrecisionDecimal operator*(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
    return HighPrecisionDecimal(a.mantissa_ * b.mantissa_, a.scale_ + b.scale_,
                                std::min(a.precision_digits_, b.precision_digits_));
}

HighPrecisionDecimal HighPrecisionDecimal::divide(const HighPrecisionDecimal& a,
                                                  const HighPrecisionDecimal& b, int scale) {
    if (b.mantissa_ == 0) {
        throw DivisionByZeroError("decimal division by zero");
    }
    if (scale < 0) {
        throw OutOfDomainError("decimal scale must be nonnegative");
    }
    // a/b = (ma/mb) * 10^(b.scale - a.scale); bring the power of ten to
    // whichever side keeps everything integral.
    int shift = scale + b.scale_ - a.scale_;
    BigInt q = shift >= 0 ? round_div_half_away(a.mantissa_ * pow10(shift), b.mantissa_)
                          : round_div_half_away(a.mantissa_, b.mantissa_ * pow10(-shift));
    return HighPrecisionDecimal(std::move(q), scale,
                                std::min({scale, a.precision_digits_, b.precision_digits_}));
}

HighPrecisionDecimal HighPrecisionDecimal::round_to(int digits) const {
    if (digits < 0) {
        throw OutOfDomainError("decimal scale must be nonnegative");
    }
    if (digits >= scale_) {
        return HighPrecisionDecimal(mantissa_ * pow10(digits - scale_), digits,
                                    std::min(precision_digits_, digits));
    }
    BigInt m = round_div_half_away(mantissa_, pow10(scale_ - digits));
    return HighPrecisionDecimal(std::move(m), digits, std::min(precision_digits_, digits));
}

int HighPrecisionDecimal::compare(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
    int scale = std::max(a.scale_, b.scale_);
    BigInt ma = a.mantissa_ * pow10(scale - a.scale_);
    BigInt mb = b.mantissa_ * pow10(scale - b.scale_);
    if (ma < mb) return -1;
    if (ma > mb) return 1;
    return 0;
}

Rational HighPrecisionDecimal::to_rational() const {
    return Rational(mantissa_, pow10(scale_));
}

std::string HighPrecisionDecimal::to_string() const {
    BigInt m = mantissa_ < 0 ? BigInt(-mantissa_) : mantissa_;
    BigInt p = pow10(scale_);
    BigInt whole = m / p;
    BigInt frac = m % p;
    std::string out = mantissa_ < 0 ? "-" : "";
    out += whole.str();
    if (scale_ > 0) {
        std::string f = frac.str();
        out += "." + std::string(scale_ - f.size(), '0') + f;
    }
    return out;
}

std::string HighPrecisionDecimal::to_scientific(int sig_digits) const {
    if (sig_digits < 1) {
        throw OutOfDomainError("scientific notation needs at least one digit");
    }
    if (mantissa_ == 0) return "0e+00";
    BigInt m = mantissa_ < 0 ? BigInt(-mantissa_) : mantissa_;
    int d = digits10(m);
    int exponent = d - 1 - scale_;
    if (d > sig_digits) {
        m = round_div_half_away(m, pow10(d - sig_digits));
        if (digits10(m) > sig_digits) {  // 999.. rounded up to 1000..
            m /= 10;
            ++exponent;
        }
    } else if (d < sig_digits) {
        m *= pow10(sig_digits - d);
    }
    std::string digits = m.str();
    std::string out = mantissa_ < 0 ? "-" : "";
    out += digits.substr(0, 1);
    if (sig_digits > 1) out += "." + digits.substr(1);
    out += "e";
    out += exponent < 0 ? "-" : "+";
    int e = exponent < 0 ? -exponent : exponent;
    std::string es = std::to_string(e);
    if (es.size() < 2) es = "0" + es;
    return out + es;
}

HighPrecisionDecimal hp_from_rational(const Rational& value, int digits) {
    if (digits < 0) {
        throw OutOfDomainError("decimal scale must be nonnegative");
    }
    BigInt m = round_div_half_away(value.numerator() * pow10(digits), value.denominator());
    return HighPrecisionDecimal::from_mantissa(std::move(m), digits);
}

bool agree_to_places(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b,
                     int places) {
    HighPrecisionDecimal diff = (a - b).abs();
    return HighPrecisionDecimal::compare(
               diff, HighPrecisionDecimal::from_mantissa(BigInt(1), places)) <= 0;
}

int floor_neg_log10(const HighPrecisionDecimal& x) {
    if (x.is_zero()) {
        throw OutOfDomainError("log of zero");
    }
    int d = digits10(x.mantissa());
    int result = x.scale() - d;
    if (is_power_of_ten(x.mantissa())) ++result;
    return result;
}

std::ostream& operator<<(std::ostream& os, const HighPrecisionDecimal& d) {
    return os << d.to_string();
}

}  // namespace polycf
