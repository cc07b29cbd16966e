#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "polycf/rational.hpp"

namespace polycf {

// 10^k for k >= 0.
BigInt pow10(int k);

// Rounded integer quotient, ties away from zero. The single rounding rule
// used everywhere in the library.
BigInt round_div_half_away(const BigInt& num, const BigInt& den);

// Fixed-point decimal: value == mantissa * 10^(-scale), scale >= 0.
// precision_digits <= scale records how many fractional places the producer
// claims correct; arithmetic carries the weaker claim of its inputs.
// Additions and multiplications are exact; only division and round_to round,
// always half away from zero.
class HighPrecisionDecimal {
public:
    HighPrecisionDecimal() : mantissa_(0), scale_(0), precision_digits_(0) {}

    static HighPrecisionDecimal from_mantissa(BigInt mantissa, int scale);
    static HighPrecisionDecimal from_int(long long value);
    // Accepts [sign]digits[.digits][e[sign]digits].
    static HighPrecisionDecimal parse(const std::string& text);

    const BigInt& mantissa() const { return mantissa_; }
    int scale() const { return scale_; }
    int precision_digits() const { return precision_digits_; }
    bool is_zero() const { return mantissa_ == 0; }
    bool is_negative() const { return mantissa_ < 0; }

    HighPrecisionDecimal operator-() const;
    HighPrecisionDecimal abs() const;

    friend HighPrecisionDecimal operator+(const HighPrecisionDecimal& a,
                                          const HighPrecisionDecimal& b);
    friend HighPrecisionDecimal operator-(const HighPrecisionDecimal& a,
                                          const HighPrecisionDecimal& b);
    friend HighPrecisionDecimal operator*(const HighPrecisionDecimal& a,
                                          const HighPrecisionDecimal& b);

    // a / b rounded to `scale` fractional places.
    static HighPrecisionDecimal divide(const HighPrecisionDecimal& a,
                                       const HighPrecisionDecimal& b, int scale);

    // Re-round to `digits` fractional places (no-op when digits >= scale).
    HighPrecisionDecimal round_to(int digits) const;

    // Exact three-way comparison of values, independent of scales.
    static int compare(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b);

    friend bool operator==(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
        return compare(a, b) == 0;
    }
    friend bool operator!=(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
        return compare(a, b) != 0;
    }
    friend bool operator<(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
        return compare(a, b) < 0;
    }
    friend bool operator<=(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
        return compare(a, b) <= 0;
    }
    friend bool operator>(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
        return compare(a, b) > 0;
    }
    friend bool operator>=(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b) {
        return compare(a, b) >= 0;
    }

    Rational to_rational() const;
    // Fixed notation with exactly scale() fractional digits: "-0.800", "3".
    std::string to_string() const;
    // Normalized scientific notation with sig_digits mantissa digits,
    // two-digit exponent: "9.56e-05". Zero prints "0e+00".
    std::string to_scientific(int sig_digits) const;

private:
    HighPrecisionDecimal(BigInt mantissa, int scale, int precision)
        : mantissa_(std::move(mantissa)), scale_(scale), precision_digits_(precision) {}

    BigInt mantissa_;
    int scale_;
    int precision_digits_;
};

// value rounded half-away-from-zero to exactly `digits` fractional places.
HighPrecisionDecimal hp_from_rational(const Rational& value, int digits);

// |a - b| <= 10^(-places), exactly.
bool agree_to_places(const HighPrecisionDecimal& a, const HighPrecisionDecimal& b,
                     int places);

// floor(-log10 |x|) for nonzero x, exact from the mantissa digit count.
int floor_neg_log10(const HighPrecisionDecimal& x);

std::ostream& operator<<(std::ostream& os, const HighPrecisionDecimal& d);

}  // namespace polycf
