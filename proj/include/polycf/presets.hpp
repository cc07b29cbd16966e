#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polycf/continued_fraction.hpp"
#include "polycf/equivalence.hpp"

namespace polycf {

// Built-in fraction catalog. reference_* fields carry documented values for
// side-by-side reporting; commands compare against them and flag
// disagreement, never assert them.
struct Preset {
    std::string name;
    std::string summary;
    // Documented rho expansion coefficients as (power, value).
    std::vector<std::pair<int, Rational>> reference_rho_coefficients;
    // Documented absolute errors as (depth, decimal string).
    std::vector<std::pair<std::int64_t, std::string>> reference_errors;
};

const std::vector<Preset>& all_presets();
const Preset* find_preset(const std::string& name);

// Constructs the named fraction; unknown names raise ParameterError.
ContinuedFraction build_preset(const std::string& name);

// r_0 = 1, r_n = -(3n-2): the rescaling that turns the hypergeometric
// kernel's rational coefficients into integer partial denominators.
ScalingSequence integerizing_scaling();

}  // namespace polycf
