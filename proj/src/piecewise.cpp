#include "polycf/piecewise.hpp"

#include <string>
#include <utility>

namespace polycf {

PiecewiseSequence::PiecewiseSequence(std::int64_t start, std::vector<Piece> pieces)
    : start_(start), pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
        throw CoverageError("piecewise sequence needs at least one piece");
    }
    if (pieces_.front().lo != start_) {
        throw CoverageError("first piece starts at n = " + std::to_string(pieces_.front().lo) +
                            ", expected n = " + std::to_string(start_));
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        bool last = i + 1 == pieces_.size();
        if (p.hi && *p.hi < p.lo) {
            throw CoverageError("empty range " + std::to_string(p.lo) + ".." +
                                std::to_string(*p.hi));
        }
        if (last) {
            if (p.hi) {
                throw CoverageError("coverage gap after n = " + std::to_string(*p.hi) +
                                    ": no piece extends to infinity");
            }
        } else {
            if (!p.hi) {
                throw CoverageError("unbounded piece before the last at n = " +
                                    std::to_string(p.lo));
            }
            std::int64_t next_lo = pieces_[i + 1].lo;
            if (next_lo <= *p.hi) {
                throw CoverageError("overlapping ranges at n = " + std::to_string(next_lo));
            }
            if (next_lo > *p.hi + 1) {
                throw CoverageError("coverage gap between n = " + std::to_string(*p.hi) +
                                    " and n = " + std::to_string(next_lo));
            }
        }
    }
}

PiecewiseSequence PiecewiseSequence::single(std::int64_t start, RationalFunction rule) {
    std::vector<Piece> pieces;
    pieces.push_back(Piece{start, std::nullopt, std::move(rule)});
    return PiecewiseSequence(start, std::move(pieces));
}

const RationalFunction& PiecewiseSequence::rule_at(std::int64_t n) const {
    if (n < start_) {
        throw OutOfDomainError("index n = " + std::to_string(n) +
                               " below sequence start n = " + std::to_string(start_));
    }
    // Pieces are few (DSL sources and transforms produce a handful); linear
    // scan beats binary search bookkeeping here.
    for (const Piece& p : pieces_) {
        if (n >= p.lo && (!p.hi || n <= *p.hi)) return p.rule;
    }
    throw OutOfDomainError("no piece covers n = " + std::to_string(n));
}

Rational seq_eval(const PiecewiseSequence& seq, std::int64_t n) {
    return seq.rule_at(n).eval_at(n);
}

}  // namespace polycf
