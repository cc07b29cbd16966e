#pragma once

#include "polycf/decimal.hpp"
#include "polycf/rational.hpp"

namespace polycf {

// pi/4 rounded to `digits` decimal places.
//
// Two independent machin-type identities are evaluated as exact rational
// partial sums with tail bounds below the guard precision:
//     pi/4 = 4*atan(1/5) - atan(1/239)
//     pi/4 = 2*atan(1/3) + atan(1/7)
// The results must agree to one unit in the last guard place; disagreement
// raises OracleInconsistencyError. Callers therefore never see an unchecked
// reference value.
HighPrecisionDecimal pi_quarter(int digits);

// Exact partial sum of atan(1/m) truncated after `terms` terms of the
// alternating odd-power series. Exposed for bracketing tests; pi_quarter uses
// an internally chosen term count.
Rational atan_inv_partial(long long m, int terms);

}  // namespace polycf
