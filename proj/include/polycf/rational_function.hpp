#pragma once

#include <cstdint>
#include <string>

#include "polycf/polynomial.hpp"

namespace polycf {

// Ratio of polynomials in a canonical form that makes equality structural:
//   - numerator and denominator share no nonconstant factor,
//   - the denominator has integer coefficients with content 1 and a positive
//     leading coefficient,
//   - zero is 0/1.
// Canonical denominators are unique per value, so two RationalFunctions
// represent the same function iff their components compare equal.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    explicit RationalFunction(Polynomial numerator);
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0 && den_.leading().is_one(); }
    Polynomial as_polynomial() const;

    // Degree of growth: deg(num) - deg(den). Meaningless for zero (returns a
    // large negative sentinel via degree() = -1 arithmetic; callers check
    // is_zero first).
    int degree_difference() const { return num_.degree() - den_.degree(); }
    Rational leading_ratio() const { return num_.leading() / den_.leading(); }

    Rational eval(const Rational& x) const;
    // Evaluation at an integer index; a vanishing denominator raises
    // PoleError carrying n.
    Rational eval_at(std::int64_t n) const;

    RationalFunction operator-() const;
    RationalFunction reciprocal() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction pow(int exponent) const;

    // f(n + k)
    RationalFunction shifted(std::int64_t k) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // "(num)/(den)", or the bare numerator rendering when den == 1.
    std::string to_expression_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

RationalFunction ratfun_multiply(const RationalFunction& a, const RationalFunction& b);
RationalFunction shift_index(const RationalFunction& f, std::int64_t k);

}  // namespace polycf
