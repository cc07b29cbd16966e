#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycf/continued_fraction.hpp"

namespace polycf {

// Index-wise rescaling r_0, r_1, ... with r_0 = 1 and every r_n nonzero
// (checked to kZeroNumeratorScanLimit). Applying it to a fraction leaves
// every convergent value f_n unchanged:
//   b~_n = r_n b_n,   a~_n = r_n r_{n-1} a_n.
class ScalingSequence {
public:
    explicit ScalingSequence(PiecewiseSequence r);

    const PiecewiseSequence& seq() const { return r_; }
    Rational at(std::int64_t n) const { return seq_eval(r_, n); }

    friend bool operator==(const ScalingSequence& a, const ScalingSequence& b) {
        return a.r_ == b.r_;
    }

private:
    PiecewiseSequence r_;
};

// The rescaled fraction, built symbolically: the index line is cut at every
// piece boundary of a, b, r, and r shifted by one, so each segment is a
// product of single rules; n = 1 and n = 2 are always materialized as
// constant pieces. The head b0 is untouched.
ContinuedFraction apply_equivalence(const ContinuedFraction& cf,
                                    const ScalingSequence& scaling);

// Pinned closed form of the flagship transformed numerator sequence,
//   a~_n = -(3n-2)(3n-5)(n-1)^2 / ((2n-1)(2n-3)),  n >= 2,
// kept as an independent route against the apply_equivalence construction.
Rational exact_tilde_numerator(std::int64_t n);

struct InvarianceRow {
    std::int64_t n = 0;
    std::optional<Rational> original;
    std::optional<Rational> transformed;
    bool equal = false;
};

struct InvarianceReport {
    std::vector<InvarianceRow> rows;
    bool all_equal = true;
};

// Exact convergent-value comparison of cf against its rescaling, n = 1..depth.
// Rows with both values undefined count as equal (the recurrence skipped the
// same index on both sides).
InvarianceReport verify_invariance(const ContinuedFraction& cf,
                                   const ScalingSequence& scaling, std::int64_t depth);

}  // namespace polycf
