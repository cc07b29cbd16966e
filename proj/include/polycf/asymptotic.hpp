#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polycf/rational_function.hpp"

namespace polycf {

// Truncated expansion f(n) = sum_{j=order..top_degree} c_j n^j + O(n^(order-1))
// with exact rational coefficients stored in descending powers.
struct AsymptoticExpansion {
    int top_degree = 0;
    std::vector<Rational> coefficients;

    int order() const { return top_degree - static_cast<int>(coefficients.size()) + 1; }
    // c_j, zero outside [order, top_degree]
    Rational coefficient_for(int power) const;
    // Exact value of the truncated sum at integer n >= 1.
    Rational eval_at(std::int64_t n) const;

    friend bool operator==(const AsymptoticExpansion& a, const AsymptoticExpansion& b) {
        return a.top_degree == b.top_degree && a.coefficients == b.coefficients;
    }
};

// Exact long division of f in descending powers of n, truncated at n^order
// (order may be negative). The coefficients are final: extending the order
// never changes an emitted coefficient. Raises OutOfDomainError when order
// exceeds the leading power deg(num) - deg(den).
AsymptoticExpansion asymptotic_expand(const RationalFunction& f, int order);

}  // namespace polycf
