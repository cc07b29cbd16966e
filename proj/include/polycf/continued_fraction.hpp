#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycf/decimal.hpp"
#include "polycf/piecewise.hpp"

namespace polycf {

// b0 + a_1/(b_1 + a_2/(b_2 + ...)) with coefficient sequences indexed from 1.
// Construction verifies both sequences start at 1 and that no partial
// numerator a_n vanishes for n <= kZeroNumeratorScanLimit (a zero a_n would
// truncate the fraction silently). Partial denominators may vanish; the
// recurrence handles that via undefined convergents.
inline constexpr std::int64_t kZeroNumeratorScanLimit = 10000;

class ContinuedFraction {
public:
    ContinuedFraction(std::string label, Rational b0, PiecewiseSequence a,
                      PiecewiseSequence b);

    const std::string& label() const { return label_; }
    const Rational& head() const { return b0_; }
    const PiecewiseSequence& numerators() const { return a_; }
    const PiecewiseSequence& denominators() const { return b_; }

    Rational a_at(std::int64_t n) const { return seq_eval(a_, n); }
    Rational b_at(std::int64_t n) const { return seq_eval(b_, n); }

    // Structural equality (labels excluded).
    friend bool operator==(const ContinuedFraction& x, const ContinuedFraction& y) {
        return x.b0_ == y.b0_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ContinuedFraction& x, const ContinuedFraction& y) {
        return !(x == y);
    }

private:
    std::string label_;
    Rational b0_;
    PiecewiseSequence a_;
    PiecewiseSequence b_;
};

// One row of the three-term recurrence A_n = b_n A_{n-1} + a_n A_{n-2},
// B_n likewise, seeded A_{-1}=1, A_0=b0, B_{-1}=0, B_0=1. value is A_n/B_n
// when B_n != 0 and absent otherwise (the recurrence continues regardless).
struct Convergent {
    std::int64_t n = 0;
    Rational A;
    Rational B;
    std::optional<Rational> value;
};

// Exact convergent prefix for n = 1..depth. With gcd_strip, integer pairs
// (A_n, B_n) are divided by their gcd after each step; values are unchanged
// (both recurrence inputs scale together), only the stored pair shrinks.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::int64_t depth,
                                    bool gcd_strip = false);

struct Evaluation {
    HighPrecisionDecimal value;  // digits + 10 places, `digits` of them claimed
    std::int64_t depth = 0;      // first index with a stable two-step window
};

// Numeric evaluation to `digits` decimal places: runs the forward recurrence
// in fixed-point decimal (digits + 22 guard places, joint power-of-ten
// rescaling of the A/B pairs keeps the shared magnitude in a band; rescaling
// never changes any A_n/B_n ratio) and stops at the first n >= 3 with
//     |f_n - f_{n-1}| < 10^-(digits+2)  and  |f_{n-1} - f_{n-2}| < 10^-(digits+2)
// over consecutive defined approximants. Exhausting max_depth raises
// NoConvergenceError carrying the last defined approximants.
Evaluation evaluate(const ContinuedFraction& cf, int digits, std::int64_t max_depth);

// f_depth alone, computed with the same fixed-point machinery at
// working_digits guard places; absent when B_depth == 0.
std::optional<HighPrecisionDecimal> approximant(const ContinuedFraction& cf,
                                                std::int64_t depth, int working_digits);

struct ErrorEntry {
    std::int64_t n = 0;
    std::optional<Rational> value;                 // absent when B_n == 0
    std::optional<HighPrecisionDecimal> abs_error; // |value - reference|
};

// |f_n - reference| for n = 1..depth from exact convergents; the error scale
// is the reference's, so the reference must carry enough places for the
// depths requested.
std::vector<ErrorEntry> error_sequence(const ContinuedFraction& cf,
                                       const HighPrecisionDecimal& reference,
                                       std::int64_t depth);

// Ratios err_{n+1}/err_n over consecutive defined entries, rounded to
// `digits` places. A zero or undefined error terminates the list.
std::vector<HighPrecisionDecimal> empirical_error_ratios(
    const std::vector<ErrorEntry>& errors, int digits = 6);

}  // namespace polycf
