#include "polycf/gauss.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polycf {

namespace {

// Both laws share the denominator (c+n-1)(c+n) once k is rewritten in terms
// of the running index n (n = 2k even, n = 2k+1 odd).
RationalFunction even_law_rule(const GaussParameters& p) {
    Polynomial half_n = Polynomial::monomial(Rational(1, 2), 1);
    Polynomial num = (Polynomial(p.b) + half_n) * (Polynomial(p.c - p.a) + half_n);
    Polynomial den = (Polynomial(p.c - Rational(1)) + Polynomial::variable()) *
                     (Polynomial(p.c) + Polynomial::variable());
    return RationalFunction(num, den);
}

RationalFunction odd_law_rule(const GaussParameters& p) {
    Polynomial half_nm1 = Polynomial({Rational(-1, 2), Rational(1, 2)});
    Polynomial num = (Polynomial(p.a) + half_nm1) * (Polynomial(p.c - p.b) + half_nm1);
    Polynomial den = (Polynomial(p.c - Rational(1)) + Polynomial::variable()) *
                     (Polynomial(p.c) + Polynomial::variable());
    return RationalFunction(num, den);
}

}  // namespace

GaussParameters::GaussParameters(Rational a_, Rational b_, Rational c_, Rational z_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), z(std::move(z_)) {
    if (c.is_zero() || (c.is_integer() && c.is_negative())) {
        throw ParameterError("parameter c must be nonzero and not a negative integer, got " +
                             c.to_string());
    }
}

Rational pochhammer(const Rational& x, int k) {
    if (k < 0) {
        throw OutOfDomainError("rising factorial needs k >= 0");
    }
    Rational product(1);
    for (int i = 0; i < k; ++i) {
        product *= x + Rational(i);
    }
    return product;
}

Rational f21_partial_sum(const GaussParameters& p, int last_k) {
    if (last_k < 0) {
        throw OutOfDomainError("partial sum needs a nonnegative final index");
    }
    Rational sum;
    Rational term(1);  // (a)_k (b)_k / ((c)_k k!) z^k, updated incrementally
    for (int k = 0;; ++k) {
        sum += term;
        if (k == last_k) break;
        Rational rk(k);
        term *= (p.a + rk) * (p.b + rk) * p.z / ((p.c + rk) * Rational(k + 1));
    }
    return sum;
}

std::vector<Rational> gauss_coefficients(const GaussParameters& p, int count) {
    if (count < 0) {
        throw OutOfDomainError("coefficient count must be nonnegative");
    }
    std::vector<Rational> out;
    out.reserve(count);
    for (int n = 1; n <= count; ++n) {
        Rational num, den;
        if (n % 2 == 0) {
            Rational k(n / 2);
            num = (p.b + k) * (p.c - p.a + k);
            den = (p.c + Rational(n - 1)) * (p.c + Rational(n));
        } else {
            Rational k((n - 1) / 2);
            num = (p.a + k) * (p.c - p.b + k);
            den = (p.c + Rational(n - 1)) * (p.c + Rational(n));
        }
        if (den.is_zero()) {
            throw ParameterError("coefficient law denominator vanishes at n = " +
                                 std::to_string(n));
        }
        out.push_back(num / den);
    }
    return out;
}

ContinuedFraction gauss_cf(const GaussParameters& p) {
    if (p.z.is_zero()) {
        throw ParameterError("z = 0 zeroes every partial numerator past the first");
    }
    RationalFunction even = even_law_rule(p);
    RationalFunction odd = odd_law_rule(p);
    if (even != odd) {
        throw ParameterError(
            "interleaved coefficient laws differ; no single closed-form rule exists");
    }
    // a_{n} = d_{n-1} * z for n >= 2.
    RationalFunction tail = shift_index(even, -1) * RationalFunction(Polynomial(p.z));
    std::vector<Piece> a_pieces;
    a_pieces.push_back(Piece{1, 1, RationalFunction(Polynomial(Rational(1)))});
    a_pieces.push_back(Piece{2, std::nullopt, std::move(tail)});
    PiecewiseSequence a(1, std::move(a_pieces));
    PiecewiseSequence b =
        PiecewiseSequence::single(1, RationalFunction(Polynomial(Rational(1))));
    std::string label = "gauss(" + p.a.to_string() + "," + p.b.to_string() + "," +
                        p.c.to_string() + "," + p.z.to_string() + ")";
    return ContinuedFraction(std::move(label), Rational(0), std::move(a), std::move(b));
}

}  // namespace polycf
