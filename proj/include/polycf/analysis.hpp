#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polycf/asymptotic.hpp"
#include "polycf/continued_fraction.hpp"
#include "polycf/decimal.hpp"

namespace polycf {

// Position of the tail-coefficient limit L relative to the disk |w| <= 1/4:
// strictly inside guarantees convergence with a geometric rate, the rim gives
// no rate, outside gives no guarantee, unknown means no limit exists (or no
// closed form for rho).
enum class DiskClassification { interior, boundary, exterior, unknown };

std::string to_string(DiskClassification c);

// rho_n = a_n / (b_n b_{n-1}); absent when a partial denominator vanishes.
struct RhoSample {
    std::int64_t n = 0;
    std::optional<Rational> rho;
};

// Samples for n = 2..depth (n = 2 is the first index with two denominators).
std::vector<RhoSample> worpitzky_parameters(const ContinuedFraction& cf,
                                            std::int64_t depth);

struct SymbolicLimit {
    enum class Reason { ok, unbounded, undefined_denominator };
    std::optional<Rational> L;
    std::optional<RationalFunction> rho_tail;  // closed form on the tail rules
    Reason reason = Reason::ok;
};

// L = lim rho_n from the tail rules alone: the ratio of leading coefficients
// when numerator and denominator degrees match, 0 when the numerator's is
// lower, absent (unbounded) when higher, absent (undefined) when the b-tail
// is identically zero.
SymbolicLimit symbolic_limit(const ContinuedFraction& cf);

// sigma(L) = (1 - sqrt(1-4|L|)) / (1 + sqrt(1-4|L|)), the per-step error
// contraction guaranteed strictly inside the disk. Exact Rational when
// 1-4|L| is a square of a rational, otherwise 12-place decimal. |L| > 1/4
// raises OutOfDomainError.
using ConvergenceFactor = std::variant<Rational, HighPrecisionDecimal>;
ConvergenceFactor convergence_factor(const Rational& L);

// k * (-log10 sigma), the decimal digits gained by k steps at contraction
// sigma in (0,1). Six decimal places, computed from exact rational log
// series (no platform libm), so output bytes are machine-independent.
HighPrecisionDecimal digits_per_iterations(const Rational& sigma, long long k);
HighPrecisionDecimal digits_per_iterations(const HighPrecisionDecimal& sigma, long long k);

struct AnalyzeOptions {
    std::int64_t sample_depth = 20;          // rho samples and empirical depth
    int expansion_order = -2;                // lowest retained power of rho
    std::optional<HighPrecisionDecimal> reference_value;  // enables empirical part
    // Documented expansion coefficients to cross-check, as (power, value);
    // disagreement adds a flag and never overrides computed output.
    std::vector<std::pair<int, Rational>> reference_rho_coefficients;
};

struct AnalysisReport {
    std::string label;
    std::vector<RhoSample> rho_samples;
    std::optional<RationalFunction> rho_closed_form;
    std::optional<Rational> L;
    DiskClassification classification = DiskClassification::unknown;
    std::optional<ConvergenceFactor> sigma;
    std::optional<HighPrecisionDecimal> digits_per_10;
    std::optional<AsymptoticExpansion> rho_expansion;
    std::vector<ErrorEntry> empirical_errors;      // empty without a reference
    std::vector<HighPrecisionDecimal> empirical_ratios;
    std::vector<std::string> flags;
};

// Pure function of its inputs: same fraction and options, byte-identical
// report (all numerics are exact or deterministic fixed-point).
AnalysisReport analyze(const ContinuedFraction& cf, const AnalyzeOptions& options = {});

}  // namespace polycf
