#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycf {

// Common base so callers can catch everything the library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic with a zero divisor (rational denominator, decimal divide,
// identically zero polynomial denominator).
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// A rational-function rule was evaluated at an index annihilating its
// denominator.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::int64_t index)
        : Error(what), index_(index) {}
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

// An argument lies outside a function's stated domain (index below a
// sequence's start, expansion order above the leading degree, sigma outside
// (0,1), ...).
class OutOfDomainError : public Error {
public:
    explicit OutOfDomainError(const std::string& what) : Error(what) {}
};

// Piecewise range list fails the coverage contract: gap, overlap, wrong first
// index, or missing infinite tail.
class CoverageError : public Error {
public:
    explicit CoverageError(const std::string& what) : Error(what) {}
};

// Structurally invalid object: zero partial numerator, hypergeometric c that
// kills a denominator, coefficient laws with no single closed form.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error(what) {}
};

// Scaling sequence violating its contract (r(0) != 1 or a zero scale factor).
class ScalingError : public Error {
public:
    explicit ScalingError(const std::string& what) : Error(what) {}
};

// evaluate() exhausted max_depth without two consecutive stable steps.
// Carries the last defined approximants (decimal strings) for diagnostics.
class NoConvergenceError : public Error {
public:
    NoConvergenceError(const std::string& what, std::int64_t depth,
                       std::vector<std::string> last_values)
        : Error(what), depth_(depth), last_values_(std::move(last_values)) {}
    std::int64_t depth() const { return depth_; }
    const std::vector<std::string>& last_values() const { return last_values_; }

private:
    std::int64_t depth_;
    std::vector<std::string> last_values_;
};

// The two independent machin-type pi/4 routes disagreed beyond one unit in
// the last place. Indicates a broken build, never a caller mistake.
class OracleInconsistencyError : public Error {
public:
    explicit OracleInconsistencyError(const std::string& what) : Error(what) {}
};

// Lexical, syntactic, or semantic failure while reading the sequence DSL.
// line/col are 1-based positions into the offending source text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string origin, int line, int col)
        : Error(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                ": " + message),
          origin_(std::move(origin)), line_(line), col_(col) {}
    const std::string& origin() const { return origin_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string origin_;
    int line_;
    int col_;
};

}  // namespace polycf
