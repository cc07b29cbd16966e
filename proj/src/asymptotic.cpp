#include "polycf/asymptotic.hpp"

#include <algorithm>
#include <string>

namespace polycf {

Rational AsymptoticExpansion::coefficient_for(int power) const {
    int idx = top_degree - power;
    if (idx < 0 || idx >= static_cast<int>(coefficients.size())) return Rational();
    return coefficients[idx];
}

Rational AsymptoticExpansion::eval_at(std::int64_t n) const {
    if (n < 1) {
        throw OutOfDomainError("expansion evaluation needs n >= 1");
    }
    Rational x(n);
    Rational sum;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        long long power = top_degree - static_cast<long long>(i);
        sum += coefficients[i] * x.pow(power);
    }
    return sum;
}

AsymptoticExpansion asymptotic_expand(const RationalFunction& f, int order) {
    if (f.is_zero()) {
        return AsymptoticExpansion{order, {Rational()}};
    }
    int top = f.degree_difference();
    if (order > top) {
        throw OutOfDomainError("expansion order " + std::to_string(order) +
                               " above the leading power " + std::to_string(top));
    }
    // Multiplying the numerator by n^K turns the Laurent division truncated
    // at n^order into one polynomial divmod: the quotient coefficient at
    // degree j+K is the expansion coefficient of n^j, and the remainder
    // (degree < deg den) holds exactly the O(n^(order-1)) part.
    int shift = std::max(0, -order);
    Polynomial shifted_num = f.numerator() * Polynomial::monomial(Rational(1), shift);
    Polynomial quotient = Polynomial::divmod(shifted_num, f.denominator()).quotient;
    AsymptoticExpansion out;
    out.top_degree = top;
    out.coefficients.reserve(top - order + 1);
    for (int j = top; j >= order; --j) {
        out.coefficients.push_back(quotient.coeff(j + shift));
    }
    return out;
}

}  // namespace polycf
