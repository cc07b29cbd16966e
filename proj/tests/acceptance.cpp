// Acceptance gate: one check per shipped claim, each printed as a single
// PASS/FAIL line. Exit status is the number of failed criteria, so a clean
// run exits 0. Run with --criterion N to execute one check in isolation.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polycf/analysis.hpp"
#include "polycf/asymptotic.hpp"
#include "polycf/cli.hpp"
#include "polycf/continued_fraction.hpp"
#include "polycf/dsl.hpp"
#include "polycf/equivalence.hpp"
#include "polycf/errors.hpp"
#include "polycf/gauss.hpp"
#include "polycf/pi_quarter.hpp"
#include "polycf/presets.hpp"

using namespace polycf;

namespace {

// Accumulates failure descriptions; empty means the criterion held.
struct Checker {
    std::vector<std::string> problems;
    std::string pass_note;

    void require(bool ok, const std::string& problem) {
        if (!ok) problems.push_back(problem);
    }
};

HighPrecisionDecimal minus_pi_quarter(int digits) {
    return -pi_quarter(digits);
}

HighPrecisionDecimal pow10_neg(int places) {
    return HighPrecisionDecimal::parse("0." + std::string(places - 1, '0') + "1");
}

std::string extract_line_value(const std::string& text, const std::string& key) {
    const std::string needle = key + " = ";
    auto pos = text.find(needle);
    if (pos == std::string::npos) return "";
    auto end = text.find('\n', pos);
    return text.substr(pos + needle.size(), end - pos - needle.size());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Criterion 1: the flagship command prints -pi/4 to ten places, the exact
// convergent error is below 1e-9 by depth 25, and the depth-200 approximant
// computed at fifty working digits agrees with the reference to all fifty.
void criterion_1(Checker& c) {
    std::ostringstream out, err;
    int code = run_cli({"eval", "--preset", "conjecture-pi4", "--digits", "10"}, out, err);
    c.require(code == 0, "eval exited " + std::to_string(code) + ": " + err.str());
    std::string printed = extract_line_value(out.str(), "value");
    c.require(!printed.empty(), "eval output carried no value line");
    if (!printed.empty()) {
        HighPrecisionDecimal value = HighPrecisionDecimal::parse(printed);
        c.require(agree_to_places(value, minus_pi_quarter(14), 10),
                  "printed value " + printed + " is not -pi/4 to 10 places");
    }

    ContinuedFraction cf = build_preset("conjecture-pi4");
    auto errors = error_sequence(cf, minus_pi_quarter(80), 25);
    c.require(errors.size() == 25 && errors[24].n == 25 && errors[24].abs_error.has_value(),
              "depth-25 error row missing");
    if (errors.size() == 25 && errors[24].abs_error) {
        c.require(*errors[24].abs_error < pow10_neg(9),
                  "depth-25 error " + errors[24].abs_error->to_scientific(3) +
                      " is not below 1e-9");
    }

    auto f200 = approximant(cf, 200, 60);
    c.require(f200.has_value(), "depth-200 approximant undefined");
    if (f200) {
        c.require(agree_to_places(*f200, minus_pi_quarter(60), 50),
                  "depth-200 approximant does not agree with -pi/4 to 50 places");
    }
    c.pass_note = "value -pi/4 to 10 places, error < 1e-9 at n=25, 50-place agreement at n=200";
}

// Criterion 2: documented errors appear side by side with computed ones, and
// the computed sequence strictly decreases on 3..40 with at least a fourfold
// drop over every five steps on 5..40.
void criterion_2(Checker& c) {
    std::ostringstream out, err;
    int code = run_cli({"table", "--preset", "conjecture-pi4", "--rows", "5,10,15",
                        "--reference", "minus_pi_over_4"},
                       out, err);
    c.require(code == 0, "table exited " + std::to_string(code) + ": " + err.str());
    for (const char* documented : {"9.56e-05", "4.37e-08", "2.01e-11"}) {
        c.require(out.str().find(documented) != std::string::npos,
                  std::string("documented error ") + documented + " missing from table output");
    }

    ContinuedFraction cf = build_preset("conjecture-pi4");
    auto errors = error_sequence(cf, minus_pi_quarter(80), 45);
    HighPrecisionDecimal four = HighPrecisionDecimal::from_int(4);
    for (std::int64_t n = 3; n <= 39; ++n) {
        const auto& here = errors[n - 1].abs_error;
        const auto& next = errors[n].abs_error;
        bool ok = here && next && *next < *here;
        c.require(ok, "error did not strictly decrease from n=" + std::to_string(n));
        if (!ok) break;
    }
    for (std::int64_t n = 5; n <= 40; ++n) {
        const auto& here = errors[n - 1].abs_error;
        const auto& later = errors[n + 4].abs_error;
        bool ok = here && later && *later * four < *here;
        c.require(ok, "error(n+5) >= error(n)/4 at n=" + std::to_string(n));
        if (!ok) break;
    }
    c.pass_note = "documented errors shown beside computed ones; strict decrease and 4x/5-step contraction hold";
}

// Criterion 3: the coefficient ladder of the (1/2, 0; 1/2; -1) construction
// is n^2/(4n^2-1) exactly for the first hundred indices.
void criterion_3(Checker& c) {
    GaussParameters p(Rational(1, 2), Rational(0), Rational(1, 2), Rational(-1));
    auto d = gauss_coefficients(p, 100);
    c.require(d.size() == 100, "expected 100 coefficients, got " + std::to_string(d.size()));
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(d.size()); ++n) {
        Rational expected(n * n, 4 * n * n - 1);
        if (d[n - 1] != expected) {
            c.problems.push_back("d_" + std::to_string(n) + " = " + d[n - 1].to_string() +
                                 ", expected " + expected.to_string());
            break;
        }
    }
    c.pass_note = "d_n = n^2/(4n^2-1) exactly for n = 1..100";
}

// Criterion 4: rescaling the kernel by r_n = -(3n-2) yields the pinned head
// values and matches the closed-form numerator route exactly on 2..200.
void criterion_4(Checker& c) {
    ContinuedFraction scaled = apply_equivalence(build_preset("gauss-kernel"),
                                                 integerizing_scaling());
    c.require(scaled.a_at(2) == Rational(-4, 3),
              "a~_2 = " + scaled.a_at(2).to_string() + ", expected -4/3");
    c.require(scaled.a_at(3) == Rational(-112, 15),
              "a~_3 = " + scaled.a_at(3).to_string() + ", expected -112/15");
    for (std::int64_t n = 2; n <= 200; ++n) {
        if (scaled.a_at(n) != exact_tilde_numerator(n)) {
            c.problems.push_back("transformed numerator differs from closed form at n=" +
                                 std::to_string(n));
            break;
        }
    }
    c.pass_note = "a~_2 = -4/3, a~_3 = -112/15, closed form matched on n = 2..200";
}

// Criterion 5: the rescaled fraction's convergent values equal the kernel's
// as exact rationals through depth 50.
void criterion_5(Checker& c) {
    InvarianceReport report =
        verify_invariance(build_preset("gauss-kernel"), integerizing_scaling(), 50);
    c.require(report.rows.size() == 50,
              "expected 50 rows, got " + std::to_string(report.rows.size()));
    if (!report.all_equal) {
        for (const auto& row : report.rows) {
            if (!row.equal) {
                c.problems.push_back("convergent values differ at n=" + std::to_string(row.n));
                break;
            }
        }
    }
    c.pass_note = "all 50 convergent values preserved exactly";
}

// Criterion 6: tail analysis of the flagship fraction gives L = -2/9, the
// first sample sits on the rim, every later sample is strictly inside
// through n = 10^4, and the verdict is interior.
void criterion_6(Checker& c) {
    ContinuedFraction cf = build_preset("conjecture-pi4");
    SymbolicLimit limit = symbolic_limit(cf);
    c.require(limit.L.has_value() && *limit.L == Rational(-2, 9),
              "symbolic limit is not -2/9");

    auto samples = worpitzky_parameters(cf, 10000);
    c.require(!samples.empty() && samples.front().n == 2 &&
                  samples.front().rho == Rational(1, 4),
              "rho_2 is not 1/4");
    Rational quarter(1, 4);
    for (const auto& s : samples) {
        if (s.n < 3) continue;
        if (!s.rho || !(s.rho->abs() < quarter)) {
            c.problems.push_back("|rho_n| < 1/4 fails at n=" + std::to_string(s.n));
            break;
        }
    }

    AnalysisReport report = analyze(cf);
    c.require(report.classification == DiskClassification::interior,
              "classification is " + to_string(report.classification) + ", expected interior");
    c.pass_note = "L = -2/9, rho_2 = 1/4, |rho_n| < 1/4 on 3..10^4, interior";
}

// Criterion 7: the contraction factor at L = -2/9 is exactly 1/2, worth
// 3.0103 decimal digits per ten iterations within 1e-4.
void criterion_7(Checker& c) {
    ConvergenceFactor sigma = convergence_factor(Rational(-2, 9));
    bool exact_half = std::holds_alternative<Rational>(sigma) &&
                      std::get<Rational>(sigma) == Rational(1, 2);
    c.require(exact_half, "sigma(-2/9) is not the exact rational 1/2");

    HighPrecisionDecimal rate = digits_per_iterations(Rational(1, 2), 10);
    HighPrecisionDecimal gap = (rate - HighPrecisionDecimal::parse("3.0103")).abs();
    c.require(gap <= HighPrecisionDecimal::parse("0.0001"),
              "digits_per_iterations(1/2, 10) = " + rate.to_string() +
                  " differs from 3.0103 by more than 1e-4");
    c.pass_note = "sigma = 1/2 exactly, 10 iterations gain " + rate.to_string() + " digits";
}

// Criterion 8: the long-division expansions. The transformed-numerator
// closed form expands to (-9/4, 21/4, -49/16) down to the constant term; the
// rho expansion opens with -2/9 and 7/27; its n^-2 coefficient is whatever
// exact division produces (8/27 here), and the mismatch against the
// documented 31/81 must surface as a flag, never as an assertion.
void criterion_8(Checker& c) {
    Polynomial numerator({Rational(-10), Rational(41), Rational(-61), Rational(39), Rational(-9)});
    Polynomial denominator({Rational(3), Rational(-8), Rational(4)});
    RationalFunction tilde(numerator, denominator);
    for (std::int64_t n = 2; n <= 40; ++n) {
        if (tilde.eval_at(n) != exact_tilde_numerator(n)) {
            c.problems.push_back("closed-form literal drifted from the pinned route at n=" +
                                 std::to_string(n));
            break;
        }
    }
    AsymptoticExpansion head = asymptotic_expand(tilde, 0);
    c.require(head.top_degree == 2, "tilde expansion top degree is not 2");
    c.require(head.coefficient_for(2) == Rational(-9, 4), "tilde n^2 coefficient is not -9/4");
    c.require(head.coefficient_for(1) == Rational(21, 4), "tilde n^1 coefficient is not 21/4");
    c.require(head.coefficient_for(0) == Rational(-49, 16),
              "tilde constant coefficient is not -49/16");

    const Preset* preset = find_preset("conjecture-pi4");
    c.require(preset != nullptr, "flagship preset missing");
    AnalyzeOptions options;
    if (preset) options.reference_rho_coefficients = preset->reference_rho_coefficients;
    AnalysisReport report = analyze(build_preset("conjecture-pi4"), options);
    c.require(report.rho_expansion.has_value(), "rho expansion missing");
    if (report.rho_expansion) {
        c.require(report.rho_expansion->coefficient_for(0) == Rational(-2, 9),
                  "rho constant coefficient is not -2/9");
        c.require(report.rho_expansion->coefficient_for(-1) == Rational(7, 27),
                  "rho n^-1 coefficient is not 7/27");
        c.require(report.rho_expansion->coefficient_for(-2) == Rational(8, 27),
                  "rho n^-2 coefficient is not the exact-division value 8/27");
    }
    bool flagged = false;
    for (const auto& flag : report.flags) {
        if (flag.find("31/81") != std::string::npos) flagged = true;
    }
    c.require(flagged, "documented 31/81 disagreement did not surface as a flag");
    c.pass_note = "tilde heads (-9/4, 21/4, -49/16); rho opens -2/9, 7/27; n^-2 = 8/27 with the 31/81 mismatch flagged";
}

// Criterion 9: the kernel sits on the disk rim and its direct evaluation
// reaches pi/4 to six places within 10^5 steps. The classification half
// holds; the evaluation half is checked exactly as stated.
void criterion_9(Checker& c) {
    ContinuedFraction kernel = build_preset("gauss-kernel");
    AnalysisReport report = analyze(kernel);
    c.require(report.classification == DiskClassification::boundary,
              "classification is " + to_string(report.classification) + ", expected boundary");

    try {
        Evaluation ev = evaluate(kernel, 6, 100000);
        c.require(agree_to_places(ev.value, pi_quarter(10), 6),
                  "evaluation stabilized at " + ev.value.round_to(6).to_string() +
                      " (depth " + std::to_string(ev.depth) + "), which is not pi/4 to 6 places");
        if (c.problems.empty()) {
            c.pass_note = "boundary classification and 6-place evaluation at depth " +
                          std::to_string(ev.depth);
        }
    } catch (const NoConvergenceError& e) {
        c.problems.push_back(
            "classification boundary holds, but evaluation never stabilized: depth " +
            std::to_string(e.depth()) + " reached with last approximants [" +
            join(e.last_values(), ", ") +
            "]; successive convergents of this fraction are the harmonic partial sums, "
            "which grow without bound, so no depth cap can produce a 6-place value");
    }
}

// Criterion 10: the reference constant. The fifty-digit value survives its
// internal dual-route cross-check and matches the frozen digits, and the
// alternating odd-reciprocal partial sums bracket it from both sides.
void criterion_10(Checker& c) {
    HighPrecisionDecimal p50 = pi_quarter(50);
    c.require(p50.to_string() == "0.78539816339744830961566084581987572104929234984378",
              "fifty-digit value is " + p50.to_string());

    Rational reference = pi_quarter(60).to_rational();
    Rational sum(0);
    for (int m = 0; m <= 101; ++m) {
        Rational term(1, 2 * m + 1);
        sum = (m % 2 == 0) ? sum + term : sum - term;
        bool ok = (m % 2 == 0) ? sum > reference : sum < reference;
        if (!ok) {
            c.problems.push_back("partial sum through index " + std::to_string(m) +
                                 " fell on the wrong side of pi/4");
            break;
        }
    }
    c.pass_note = "dual-route value matches frozen digits; 102 partial sums bracket correctly";
}

// Criterion 11: the documented grammar examples and the print/parse loop.
void criterion_11(Checker& c) {
    ContinuedFraction conjecture = dsl::parse_cf_spec(
        "b0 = 0; a(n) = { 1 for n in 1..2; -(n-1)*(2*n-5) for n >= 3 }; b(n) = -(3*n-2)");
    c.require(conjecture == build_preset("conjecture-pi4"),
              "piecewise example did not parse to the flagship fraction");

    ContinuedFraction sqrt2 = dsl::parse_cf_spec("b0 = 1; a(n) = 1; b(n) = 2");
    c.require(sqrt2 == build_preset("sqrt2"), "constant example did not parse to the sqrt fraction");
    std::string value = evaluate(sqrt2, 10, 200).value.round_to(10).to_string();
    c.require(value == "1.4142135624", "constant example evaluated to " + value);

    bool rejected = false;
    try {
        dsl::parse_cf_spec("b0 = 0; a(n) = { 1 for n in 1..2 }; b(n) = 1");
    } catch (const ParseError& e) {
        rejected = std::string(e.what()).find("coverage gap") != std::string::npos;
        if (!rejected) c.problems.push_back(std::string("gap example raised: ") + e.what());
    }
    c.require(rejected, "gap example was not rejected as a coverage gap");

    for (const auto& preset : all_presets()) {
        ContinuedFraction cf = build_preset(preset.name);
        if (dsl::parse_cf_spec(dsl::to_dsl(cf)) != cf) {
            c.problems.push_back("print/parse round trip broke preset " + preset.name);
        }
    }
    c.pass_note = "grammar examples behave as documented; all presets round-trip";
}

using CriterionFn = void (*)(Checker&);

constexpr CriterionFn kCriteria[] = {
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
};
constexpr int kCriterionCount = static_cast<int>(sizeof(kCriteria) / sizeof(kCriteria[0]));

bool run_one(int number) {
    Checker checker;
    try {
        kCriteria[number - 1](checker);
    } catch (const std::exception& e) {
        checker.problems.push_back(std::string("unexpected exception: ") + e.what());
    }
    if (checker.problems.empty()) {
        std::cout << "criterion " << number << ": PASS";
        if (!checker.pass_note.empty()) std::cout << " (" << checker.pass_note << ")";
        std::cout << "\n";
        return true;
    }
    std::cout << "criterion " << number << ": FAIL (" << join(checker.problems, "; ") << ")\n";
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            int n = std::atoi(argv[++i]);
            if (n < 1 || n > kCriterionCount) {
                std::cerr << "criterion number must be 1.." << kCriterionCount << "\n";
                return 64;
            }
            wanted.push_back(n);
        } else {
            std::cerr << "usage: polycf_acceptance [--criterion N]\n";
            return 64;
        }
    }
    if (wanted.empty()) {
        for (int n = 1; n <= kCriterionCount; ++n) wanted.push_back(n);
    }
    int failures = 0;
    for (int n : wanted) {
        if (!run_one(n)) ++failures;
    }
    return failures;
}
