#include "polycf/continued_fraction.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace polycf {

namespace {

int digits10(const BigInt& value) {
    if (value == 0) return 0;
    std::string s = value.str();
    return static_cast<int>(s.size()) - (s[0] == '-' ? 1 : 0);
}

// Forward recurrence in fixed-point decimal over raw mantissas. The four
// state integers share one implicit power-of-ten offset; rescaling shifts
// them together, so every ratio A_n/B_n survives exactly. Relative error per
// step is ~10^-guard from coefficient rounding, accumulating linearly in n.
class FixedPointRecurrence {
public:
    FixedPointRecurrence(const ContinuedFraction& cf, int guard_places)
        : cf_(cf),
          unit_(pow10(guard_places)),
          band_center_(guard_places + 25),
          band_low_(guard_places + 10),
          band_high_(guard_places + 40),
          a_prev_(unit_),
          b_prev_(0),
          a_cur_(round_div_half_away(cf.head().numerator() * unit_,
                                     cf.head().denominator())),
          b_cur_(unit_) {}

    // Advances to index n (must be called with n = 1, 2, 3, ... in order).
    void step(std::int64_t n) {
        Rational an = cf_.a_at(n);
        Rational bn = cf_.b_at(n);
        BigInt ai = round_div_half_away(an.numerator() * unit_, an.denominator());
        BigInt bi = round_div_half_away(bn.numerator() * unit_, bn.denominator());
        BigInt a_next = round_div_half_away(bi * a_cur_ + ai * a_prev_, unit_);
        BigInt b_next = round_div_half_away(bi * b_cur_ + ai * b_prev_, unit_);
        a_prev_ = std::move(a_cur_);
        b_prev_ = std::move(b_cur_);
        a_cur_ = std::move(a_next);
        b_cur_ = std::move(b_next);
        rescale();
    }

    bool defined() const { return b_cur_ != 0; }

    // A_n/B_n at `scale` fractional places; the shared offset cancels.
    HighPrecisionDecimal value(int scale) const {
        return HighPrecisionDecimal::from_mantissa(
            round_div_half_away(a_cur_ * pow10(scale), b_cur_), scale);
    }

private:
    void rescale() {
        int m = std::max({digits10(a_cur_), digits10(b_cur_), digits10(a_prev_),
                          digits10(b_prev_)});
        if (m == 0) {
            throw Error("internal: recurrence state vanished");
        }
        if (m > band_high_) {
            BigInt down = pow10(m - band_center_);
            a_prev_ = round_div_half_away(a_prev_, down);
            b_prev_ = round_div_half_away(b_prev_, down);
            a_cur_ = round_div_half_away(a_cur_, down);
            b_cur_ = round_div_half_away(b_cur_, down);
        } else if (m < band_low_) {
            BigInt up = pow10(band_center_ - m);
            a_prev_ *= up;
            b_prev_ *= up;
            a_cur_ *= up;
            b_cur_ *= up;
        }
    }

    const ContinuedFraction& cf_;
    BigInt unit_;
    int band_center_;
    int band_low_;
    int band_high_;
    BigInt a_prev_, b_prev_;  // index n-1
    BigInt a_cur_, b_cur_;    // index n
};

}  // namespace

ContinuedFraction::ContinuedFraction(std::string label, Rational b0, PiecewiseSequence a,
                                     PiecewiseSequence b)
    : label_(std::move(label)), b0_(std::move(b0)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.start_index() != 1 || b_.start_index() != 1) {
        throw ParameterError("coefficient sequences must start at n = 1");
    }
    for (const Piece& p : a_.pieces()) {
        if (p.rule.is_zero()) {
            throw ParameterError("partial numerator rule is identically zero from n = " +
                                 std::to_string(p.lo));
        }
    }
    for (std::int64_t n = 1; n <= kZeroNumeratorScanLimit; ++n) {
        if (seq_eval(a_, n).is_zero()) {
            throw ParameterError("partial numerator vanishes at n = " + std::to_string(n));
        }
    }
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::int64_t depth,
                                    bool gcd_strip) {
    std::vector<Convergent> out;
    if (depth < 1) return out;
    out.reserve(static_cast<std::size_t>(depth));
    Rational a_prev(1), b_prev(0);          // A_{-1}, B_{-1}
    Rational a_cur = cf.head(), b_cur(1);   // A_0, B_0
    for (std::int64_t n = 1; n <= depth; ++n) {
        Rational an = cf.a_at(n);
        Rational bn = cf.b_at(n);
        Rational a_next = bn * a_cur + an * a_prev;
        Rational b_next = bn * b_cur + an * b_prev;
        a_prev = std::move(a_cur);
        b_prev = std::move(b_cur);
        a_cur = std::move(a_next);
        b_cur = std::move(b_next);
        if (gcd_strip && a_cur.is_integer() && b_cur.is_integer() &&
            a_prev.is_integer() && b_prev.is_integer()) {
            BigInt g = boost::multiprecision::gcd(
                boost::multiprecision::gcd(a_cur.numerator(), b_cur.numerator()),
                boost::multiprecision::gcd(a_prev.numerator(), b_prev.numerator()));
            if (g < 0) g = -g;
            if (g > 1) {
                Rational inv(BigInt(1), g);
                a_cur *= inv;
                b_cur *= inv;
                a_prev *= inv;
                b_prev *= inv;
            }
        }
        Convergent row;
        row.n = n;
        row.A = a_cur;
        row.B = b_cur;
        if (!b_cur.is_zero()) row.value = a_cur / b_cur;
        out.push_back(std::move(row));
    }
    return out;
}

Evaluation evaluate(const ContinuedFraction& cf, int digits, std::int64_t max_depth) {
    if (digits < 1) {
        throw OutOfDomainError("evaluation needs digits >= 1");
    }
    if (max_depth < 3) {
        throw OutOfDomainError("evaluation needs max_depth >= 3");
    }
    int out_scale = digits + 10;
    HighPrecisionDecimal threshold =
        HighPrecisionDecimal::from_mantissa(BigInt(1), digits + 2);
    FixedPointRecurrence rec(cf, digits + 22);
    // Window of the last three approximants; an undefined convergent clears
    // it, so stabilization always reflects consecutive defined steps.
    std::deque<HighPrecisionDecimal> window;
    std::deque<HighPrecisionDecimal> last_defined;
    for (std::int64_t n = 1; n <= max_depth; ++n) {
        rec.step(n);
        if (!rec.defined()) {
            window.clear();
            continue;
        }
        HighPrecisionDecimal f = rec.value(out_scale);
        window.push_back(f);
        if (window.size() > 3) window.pop_front();
        last_defined.push_back(f);
        if (last_defined.size() > 3) last_defined.pop_front();
        if (n >= 3 && window.size() == 3) {
            HighPrecisionDecimal d1 = (window[2] - window[1]).abs();
            HighPrecisionDecimal d0 = (window[1] - window[0]).abs();
            if (d1 < threshold && d0 < threshold) {
                return Evaluation{f, n};
            }
        }
    }
    std::vector<std::string> last;
    for (const auto& v : last_defined) last.push_back(v.round_to(digits + 2).to_string());
    throw NoConvergenceError(
        "no convergence within depth " + std::to_string(max_depth) +
            " at stabilization threshold 10^-" + std::to_string(digits + 2),
        max_depth, std::move(last));
}

std::optional<HighPrecisionDecimal> approximant(const ContinuedFraction& cf,
                                                std::int64_t depth, int working_digits) {
    if (depth < 1) {
        throw OutOfDomainError("approximant needs depth >= 1");
    }
    FixedPointRecurrence rec(cf, working_digits + 22);
    for (std::int64_t n = 1; n <= depth; ++n) rec.step(n);
    if (!rec.defined()) return std::nullopt;
    return rec.value(working_digits);
}

std::vector<ErrorEntry> error_sequence(const ContinuedFraction& cf,
                                       const HighPrecisionDecimal& reference,
                                       std::int64_t depth) {
    Rational ref = reference.to_rational();
    int scale = reference.scale();
    std::vector<ErrorEntry> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(depth, 0)));
    for (const Convergent& c : convergents(cf, depth)) {
        ErrorEntry e;
        e.n = c.n;
        if (c.value) {
            e.value = c.value;
            e.abs_error = hp_from_rational((*c.value - ref).abs(), scale);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<HighPrecisionDecimal> empirical_error_ratios(
    const std::vector<ErrorEntry>& errors, int digits) {
    std::vector<HighPrecisionDecimal> out;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const auto& cur = errors[i].abs_error;
        const auto& next = errors[i + 1].abs_error;
        if (!cur || !next || cur->is_zero() || next->is_zero()) break;
        out.push_back(HighPrecisionDecimal::divide(*next, *cur, digits));
    }
    return out;
}

}  // namespace polycf
