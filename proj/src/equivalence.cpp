#include "polycf/equivalence.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace polycf {

ScalingSequence::ScalingSequence(PiecewiseSequence r) : r_(std::move(r)) {
    if (r_.start_index() != 0) {
        throw ScalingError("scaling sequence must start at n = 0");
    }
    if (!seq_eval(r_, 0).is_one()) {
        throw ScalingError("scaling sequence must have r(0) = 1, got " +
                           seq_eval(r_, 0).to_string());
    }
    for (std::int64_t n = 1; n <= kZeroNumeratorScanLimit; ++n) {
        if (seq_eval(r_, n).is_zero()) {
            throw ScalingError("scale factor vanishes at n = " + std::to_string(n));
        }
    }
}

ContinuedFraction apply_equivalence(const ContinuedFraction& cf,
                                    const ScalingSequence& scaling) {
    const PiecewiseSequence& a = cf.numerators();
    const PiecewiseSequence& b = cf.denominators();
    const PiecewiseSequence& r = scaling.seq();

    // Segment starts: wherever any participating rule can change, plus 1, 2
    // (materialized heads) and 3 (first symbolic index).
    std::set<std::int64_t> starts{1, 2, 3};
    for (const Piece& p : a.pieces()) starts.insert(std::max<std::int64_t>(p.lo, 1));
    for (const Piece& p : b.pieces()) starts.insert(std::max<std::int64_t>(p.lo, 1));
    for (const Piece& p : r.pieces()) {
        starts.insert(std::max<std::int64_t>(p.lo, 1));
        starts.insert(std::max<std::int64_t>(p.lo + 1, 1));
    }

    std::vector<Piece> a_pieces;
    std::vector<Piece> b_pieces;
    for (auto it = starts.begin(); it != starts.end(); ++it) {
        std::int64_t lo = *it;
        auto next = std::next(it);
        std::optional<std::int64_t> hi;
        if (next != starts.end()) hi = *next - 1;

        if (lo <= 2) {
            Rational rn = scaling.at(lo);
            Rational rp = scaling.at(lo - 1);
            Rational av = rn * rp * cf.a_at(lo);
            Rational bv = rn * cf.b_at(lo);
            a_pieces.push_back(Piece{lo, hi, RationalFunction(Polynomial(av))});
            b_pieces.push_back(Piece{lo, hi, RationalFunction(Polynomial(bv))});
            continue;
        }
        // Within [lo, hi] every source sequence is governed by one rule, and
        // r_{n-1} by the rule covering lo - 1 shifted forward.
        RationalFunction rn = r.rule_at(lo);
        RationalFunction rp = shift_index(r.rule_at(lo - 1), -1);
        RationalFunction a_rule = rn * rp * a.rule_at(lo);
        RationalFunction b_rule = rn * b.rule_at(lo);
        a_pieces.push_back(Piece{lo, hi, std::move(a_rule)});
        b_pieces.push_back(Piece{lo, hi, std::move(b_rule)});
    }

    return ContinuedFraction(cf.label() + "-rescaled", cf.head(),
                             PiecewiseSequence(1, std::move(a_pieces)),
                             PiecewiseSequence(1, std::move(b_pieces)));
}

Rational exact_tilde_numerator(std::int64_t n) {
    if (n < 2) {
        throw OutOfDomainError("closed form holds for n >= 2");
    }
    Rational rn(n);
    Rational num = (Rational(3) * rn - Rational(2)) * (Rational(3) * rn - Rational(5)) *
                   (rn - Rational(1)) * (rn - Rational(1));
    Rational den = (Rational(2) * rn - Rational(1)) * (Rational(2) * rn - Rational(3));
    return -(num / den);
}

InvarianceReport verify_invariance(const ContinuedFraction& cf,
                                   const ScalingSequence& scaling, std::int64_t depth) {
    ContinuedFraction transformed = apply_equivalence(cf, scaling);
    std::vector<Convergent> lhs = convergents(cf, depth);
    std::vector<Convergent> rhs = convergents(transformed, depth);
    InvarianceReport report;
    report.rows.reserve(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        InvarianceRow row;
        row.n = lhs[i].n;
        row.original = lhs[i].value;
        row.transformed = rhs[i].value;
        row.equal = (row.original.has_value() == row.transformed.has_value()) &&
                    (!row.original || *row.original == *row.transformed);
        if (!row.equal) report.all_equal = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace polycf
