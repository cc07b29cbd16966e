#pragma once

#include <vector>

#include "polycf/continued_fraction.hpp"
#include "polycf/rational.hpp"

namespace polycf {

// Parameter tuple (a, b; c; z) of the hypergeometric ratio construction.
// c must be nonzero and not a negative integer (it feeds every Pochhammer
// denominator and both coefficient-law denominators).
struct GaussParameters {
    GaussParameters(Rational a, Rational b, Rational c, Rational z);

    Rational a, b, c, z;
};

// Rising factorial x(x+1)...(x+k-1); empty product 1 for k = 0.
Rational pochhammer(const Rational& x, int k);

// Exact partial sum sum_{k=0}^{last_k} (a)_k (b)_k / ((c)_k k!) z^k.
Rational f21_partial_sum(const GaussParameters& p, int last_k);

// Coefficients d_1..d_count of the contiguous-ratio fraction, from the
// interleaved laws
//   d_{2k}   = (b+k)(c-a+k) / ((c+2k-1)(c+2k)),   k >= 1
//   d_{2k+1} = (a+k)(c-b+k) / ((c+2k)(c+2k+1)),   k >= 0.
std::vector<Rational> gauss_coefficients(const GaussParameters& p, int count);

// The induced continued fraction: head 0, a_1 = 1, a_{n+1} = d_n * z,
// b_n = 1. Requires z != 0 (z = 0 would zero every later numerator) and that
// the two coefficient laws, rewritten as rational functions of the running
// index n, agree; otherwise the interleaving has no single closed-form rule
// a range-based sequence can express, and ParameterError is raised.
ContinuedFraction gauss_cf(const GaussParameters& p);

}  // namespace polycf
