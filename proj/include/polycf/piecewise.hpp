#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycf/rational_function.hpp"

namespace polycf {

// One rule active on [lo, hi], or on [lo, infinity) when hi is absent.
// RationalFunction doubles as the polynomial case (denominator 1).
struct Piece {
    std::int64_t lo;
    std::optional<std::int64_t> hi;
    RationalFunction rule;

    friend bool operator==(const Piece& a, const Piece& b) {
        return a.lo == b.lo && a.hi == b.hi && a.rule == b.rule;
    }
};

// Total sequence on [start, infinity): pieces are ascending, contiguous
// (next.lo == prev.hi + 1), and exactly the last one is unbounded. The
// constructor enforces all of that, so a constructed sequence is evaluable at
// every index >= start (modulo poles of individual rules).
class PiecewiseSequence {
public:
    PiecewiseSequence(std::int64_t start, std::vector<Piece> pieces);

    static PiecewiseSequence single(std::int64_t start, RationalFunction rule);

    std::int64_t start_index() const { return start_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const Piece& tail() const { return pieces_.back(); }

    const RationalFunction& rule_at(std::int64_t n) const;

    friend bool operator==(const PiecewiseSequence& a, const PiecewiseSequence& b) {
        return a.start_ == b.start_ && a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const PiecewiseSequence& a, const PiecewiseSequence& b) {
        return !(a == b);
    }

private:
    std::int64_t start_;
    std::vector<Piece> pieces_;
};

// Value at index n. n < start raises OutOfDomainError; a rule denominator
// vanishing at n raises PoleError.
Rational seq_eval(const PiecewiseSequence& seq, std::int64_t n);

}  // namespace polycf
