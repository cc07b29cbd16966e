#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "polycf/errors.hpp"

namespace polycf {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Invariant: denominator > 0, gcd(|num|, den) == 1,
// and zero is canonically 0/1. Every constructor and operation re-establishes
// the invariant, so two Rationals are equal iff their components are.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational abs() const;
    // Multiplicative inverse; zero raises DivisionByZeroError.
    Rational reciprocal() const;
    // Integer power; negative exponents invert (zero base then raises).
    Rational pow(long long exponent) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    // Always "p/q", the serialization form.
    std::string to_fraction_string() const;

    // Reads "p" or "p/q" with optional leading '-'. Raises Error on anything
    // else (q == 0 raises DivisionByZeroError).
    static Rational parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

// Canonicalizing constructor exposed as a named operation: reduces to lowest
// terms with a positive denominator.
Rational rat_normalize(const BigInt& num, const BigInt& den);

// Nonempty run of decimal digits to an integer. Always base ten: the BigInt
// string constructor would read a leading '0' as an octal prefix.
BigInt bigint_from_digits(const std::string& digits);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polycf
