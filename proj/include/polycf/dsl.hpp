#pragma once

#include <string>

#include "polycf/continued_fraction.hpp"
#include "polycf/equivalence.hpp"

namespace polycf {
namespace dsl {

// Sequence-description language. A fraction spec is three definitions in
// fixed order:
//
//   cf_spec   := "b0" "=" rational ";" "a" defbody ";" "b" defbody
//   defbody   := "(" "n" ")" "=" rhs
//   rhs       := expr | "{" piece (";" piece)* "}"
//   piece     := expr "for" "n" ("in" int ".." int | ">=" int)
//   expr      := term (("+" | "-") term)*
//   term      := factor (("*" | "/") factor)*
//   factor    := "-" factor | power
//   power     := primary ("^" uint)*
//   primary   := rational | "n" | "(" expr ")"
//   rational  := uint ("/" uint)?
//
// "1/2" lexes as one rational literal (so 3/4^2 means (3/4)^2); negative
// constants are spelled with unary minus. Coefficient sequences run from
// n = 1; a scaling spec is a single "r" definition running from n = 0.
//
// Parse errors carry origin:line:col. Semantic violations found while
// assembling the sequences (range overlap, coverage gap, division by an
// identically zero expression) are reported the same way.

ContinuedFraction parse_cf_spec(const std::string& text,
                                const std::string& origin = "<inline>");

ScalingSequence parse_scaling_spec(const std::string& text,
                                   const std::string& origin = "<inline>");

// Canonical rendering: expanded polynomials in descending powers, "(num)/(den)"
// for proper rational functions, single-rule sequences without braces.
// Feeding the result back to the parser reproduces the object structurally.
std::string to_dsl(const ContinuedFraction& cf);
std::string to_dsl(const ScalingSequence& scaling);

}  // namespace dsl
}  // namespace polycf
