#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycf/rational.hpp"

namespace polycf {

// Univariate polynomial over Rational in ascending coefficient order, always
// trimmed (no trailing zero coefficients). The zero polynomial has an empty
// coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> ascending_coefficients);

    static Polynomial variable();                      // n
    static Polynomial monomial(Rational coeff, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // coefficient of n^k, zero outside the stored range
    Rational coeff(int k) const;
    Rational leading() const;
    Rational constant_term() const;

    Rational eval(const Rational& x) const;
    Rational eval_at(std::int64_t n) const { return eval(Rational(n)); }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int exponent) const;

    // p(n + k)
    Polynomial shifted(std::int64_t k) const;

    // Quotient and remainder with deg(remainder) < deg(divisor).
    struct DivMod;
    static DivMod divmod(const Polynomial& num, const Polynomial& den);

    // Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Expression-syntax rendering, descending powers: "-2*n^2 + 7*n - 5".
    std::string to_expression_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

}  // namespace polycf
