#include "polycf/presets.hpp"

#include "polycf/dsl.hpp"
#include "polycf/gauss.hpp"

namespace polycf {

namespace {

const char* kConjectureSpec =
    "b0 = 0; a(n) = { 1 for n in 1..2; -(n-1)*(2*n-5) for n >= 3 }; b(n) = -(3*n-2)";
const char* kSqrt2Spec = "b0 = 1; a(n) = 1; b(n) = 2";
const char* kOscillatingSpec = "b0 = 0; a(n) = 1; b(n) = 0";
const char* kIntegerizingScaling = "r(n) = { 1 for n in 0..0; -(3*n-2) for n >= 1 }";

ContinuedFraction relabel(const ContinuedFraction& cf, const std::string& label) {
    return ContinuedFraction(label, cf.head(), cf.numerators(), cf.denominators());
}

GaussParameters kernel_parameters() {
    return GaussParameters(Rational(1, 2), Rational(0), Rational(1, 2), Rational(-1));
}

}  // namespace

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> presets = [] {
        std::vector<Preset> list;
        Preset conjecture;
        conjecture.name = "conjecture-pi4";
        conjecture.summary =
            "integer-coefficient fraction conjectured to equal -pi/4";
        conjecture.reference_rho_coefficients = {
            {0, Rational(-2, 9)}, {-1, Rational(7, 27)}, {-2, Rational(31, 81)}};
        conjecture.reference_errors = {
            {5, "9.56e-05"}, {10, "4.37e-08"}, {15, "2.01e-11"}};
        list.push_back(std::move(conjecture));

        Preset kernel;
        kernel.name = "gauss-kernel";
        kernel.summary =
            "hypergeometric contiguous-ratio fraction at (1/2, 0; 1/2; z = -1)";
        list.push_back(std::move(kernel));

        Preset transformed;
        transformed.name = "exact-transformed";
        transformed.summary =
            "gauss-kernel rescaled to integer partial denominators -(3n-2)";
        list.push_back(std::move(transformed));

        Preset sqrt2;
        sqrt2.name = "sqrt2";
        sqrt2.summary = "1 + 1/(2 + 1/(2 + ...)), converging to sqrt(2)";
        list.push_back(std::move(sqrt2));

        Preset oscillating;
        oscillating.name = "oscillating";
        oscillating.summary =
            "a_n = 1, b_n = 0: every odd convergent undefined, never stabilizes";
        list.push_back(std::move(oscillating));
        return list;
    }();
    return presets;
}

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : all_presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

ContinuedFraction build_preset(const std::string& name) {
    if (name == "conjecture-pi4") {
        return dsl::parse_cf_spec(kConjectureSpec, name);
    }
    if (name == "gauss-kernel") {
        return relabel(gauss_cf(kernel_parameters()), name);
    }
    if (name == "exact-transformed") {
        ContinuedFraction kernel = gauss_cf(kernel_parameters());
        return relabel(apply_equivalence(kernel, integerizing_scaling()), name);
    }
    if (name == "sqrt2") {
        return dsl::parse_cf_spec(kSqrt2Spec, name);
    }
    if (name == "oscillating") {
        return dsl::parse_cf_spec(kOscillatingSpec, name);
    }
    throw ParameterError("unknown preset '" + name + "'");
}

ScalingSequence integerizing_scaling() {
    return dsl::parse_scaling_spec(kIntegerizingScaling, "integerizing");
}

}  // namespace polycf
