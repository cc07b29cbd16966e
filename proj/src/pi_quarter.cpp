#include "polycf/pi_quarter.hpp"

namespace polycf {

namespace {

// atan(1/m) = sum_{k>=0} (-1)^k / ((2k+1) m^(2k+1)). Terms alternate and
// decrease, so the truncation error is below the first omitted term; we stop
// once that bound drops under 10^(-bound_digits).
Rational atan_inv(long long m, int bound_digits) {
    BigInt mm(m);
    BigInt power = mm;          // m^(2k+1)
    BigInt step = mm * mm;
    BigInt limit = pow10(bound_digits);
    Rational sum;
    bool negative = false;
    for (long long k = 1;; k += 2) {
        Rational term(BigInt(1), BigInt(k) * power);
        sum += negative ? -term : term;
        negative = !negative;
        power *= step;
        if ((k + 2) * power > limit) break;
    }
    return sum;
}

}  // namespace

Rational atan_inv_partial(long long m, int terms) {
    if (m < 2 || terms < 1) {
        throw OutOfDomainError("atan series needs m >= 2 and at least one term");
    }
    BigInt mm(m);
    BigInt power = mm;
    BigInt step = mm * mm;
    Rational sum;
    for (int k = 0; k < terms; ++k) {
        Rational term(BigInt(1), BigInt(2 * k + 1) * power);
        sum += (k % 2 == 0) ? term : -term;
        power *= step;
    }
    return sum;
}

HighPrecisionDecimal pi_quarter(int digits) {
    if (digits < 0) {
        throw OutOfDomainError("decimal scale must be nonnegative");
    }
    int guard = digits + 10;
    int bound = guard + 4;
    Rational machin = Rational(4) * atan_inv(5, bound) - atan_inv(239, bound);
    Rational hutton = Rational(2) * atan_inv(3, bound) + atan_inv(7, bound);
    HighPrecisionDecimal a = hp_from_rational(machin, guard);
    HighPrecisionDecimal b = hp_from_rational(hutton, guard);
    BigInt diff = a.mantissa() - b.mantissa();
    if (diff > 1 || diff < -1) {
        throw OracleInconsistencyError(
            "machin-type pi/4 routes disagree at " + std::to_string(guard) +
            " places: " + a.to_string() + " vs " + b.to_string());
    }
    return a.round_to(digits);
}

}  // namespace polycf
