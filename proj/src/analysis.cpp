#include "polycf/analysis.hpp"

#include <algorithm>
#include <utility>

namespace polycf {

namespace {

int digits10(const BigInt& value) {
    if (value == 0) return 1;
    std::string s = value.str();
    return static_cast<int>(s.size()) - (s[0] == '-' ? 1 : 0);
}

// 2 * sum w^(2j+1)/(2j+1) = ln((1+w)/(1-w)), truncated once the next term
// drops below 10^-20. For |w| <= 9/11 the geometric tail is below 4e-20.
Rational atanh_twice(const Rational& w) {
    const Rational threshold(BigInt(1), pow10(20));
    Rational sum;
    Rational power = w;        // w^(2j+1)
    Rational wsq = w * w;
    for (long long j = 0;; ++j) {
        Rational term = power / Rational(2 * j + 1);
        sum += term;
        if (term.abs() < threshold) break;
        power *= wsq;
    }
    return sum * Rational(2);
}

const Rational& ln10_value() {
    // ln 10 = 2 atanh(9/11); the series is slowest exactly here.
    static const Rational value = atanh_twice(Rational(9, 11));
    return value;
}

// ln x for x > 0 as series + e * ln 10 after normalizing x = f * 10^e with
// f in [1, 10).
Rational ln_rational(const Rational& x) {
    if (x.sign() <= 0) {
        throw OutOfDomainError("logarithm needs a positive argument");
    }
    int e = digits10(x.numerator()) - digits10(x.denominator());
    Rational f = e >= 0 ? x / Rational(pow10(e)) : x * Rational(pow10(-e));
    if (f < Rational(1)) {
        --e;
        f *= Rational(10);
    }
    Rational w = (f - Rational(1)) / (f + Rational(1));
    return atanh_twice(w) + Rational(e) * ln10_value();
}

HighPrecisionDecimal digits_per_from_rational(const Rational& sigma, long long k) {
    if (sigma.sign() <= 0 || sigma >= Rational(1)) {
        throw OutOfDomainError("contraction factor must lie in (0, 1)");
    }
    if (k < 0) {
        throw OutOfDomainError("iteration count must be nonnegative");
    }
    Rational value = Rational(k) * (-ln_rational(sigma)) / ln10_value();
    return hp_from_rational(value, 6);
}

// floor(sqrt(t)) scaled: round(sqrt(p/q) * 10^digits) with error under one
// unit in the last place.
HighPrecisionDecimal hp_sqrt(const Rational& t, int digits) {
    BigInt x = t.numerator() * t.denominator() * pow10(2 * digits);
    BigInt root = boost::multiprecision::sqrt(x);  // floor sqrt
    return HighPrecisionDecimal::from_mantissa(round_div_half_away(root, t.denominator()),
                                               digits);
}

}  // namespace

std::string to_string(DiskClassification c) {
    switch (c) {
        case DiskClassification::interior: return "interior";
        case DiskClassification::boundary: return "boundary";
        case DiskClassification::exterior: return "exterior";
        case DiskClassification::unknown: return "unknown";
    }
    return "unknown";
}

std::vector<RhoSample> worpitzky_parameters(const ContinuedFraction& cf,
                                            std::int64_t depth) {
    std::vector<RhoSample> out;
    for (std::int64_t n = 2; n <= depth; ++n) {
        RhoSample s;
        s.n = n;
        Rational d = cf.b_at(n) * cf.b_at(n - 1);
        if (!d.is_zero()) s.rho = cf.a_at(n) / d;
        out.push_back(std::move(s));
    }
    return out;
}

SymbolicLimit symbolic_limit(const ContinuedFraction& cf) {
    const RationalFunction& a_tail = cf.numerators().tail().rule;
    const RationalFunction& b_tail = cf.denominators().tail().rule;
    SymbolicLimit out;
    if (b_tail.is_zero()) {
        out.reason = SymbolicLimit::Reason::undefined_denominator;
        return out;
    }
    RationalFunction rho = a_tail / (b_tail * shift_index(b_tail, -1));
    out.rho_tail = rho;
    if (rho.is_zero()) {
        out.L = Rational(0);
        return out;
    }
    int dd = rho.degree_difference();
    if (dd > 0) {
        out.reason = SymbolicLimit::Reason::unbounded;
        return out;
    }
    out.L = dd == 0 ? rho.leading_ratio() : Rational(0);
    return out;
}

ConvergenceFactor convergence_factor(const Rational& L) {
    Rational t = Rational(1) - Rational(4) * L.abs();
    if (t.is_negative()) {
        throw OutOfDomainError("|L| exceeds 1/4; no contraction factor exists");
    }
    BigInt sp = boost::multiprecision::sqrt(t.numerator());
    BigInt sq = boost::multiprecision::sqrt(t.denominator());
    if (sp * sp == t.numerator() && sq * sq == t.denominator()) {
        Rational s(sp, sq);
        return (Rational(1) - s) / (Rational(1) + s);
    }
    HighPrecisionDecimal s = hp_sqrt(t, 16);
    HighPrecisionDecimal one = HighPrecisionDecimal::from_int(1);
    return HighPrecisionDecimal::divide(one - s, one + s, 12);
}

HighPrecisionDecimal digits_per_iterations(const Rational& sigma, long long k) {
    return digits_per_from_rational(sigma, k);
}

HighPrecisionDecimal digits_per_iterations(const HighPrecisionDecimal& sigma, long long k) {
    return digits_per_from_rational(sigma.to_rational(), k);
}

AnalysisReport analyze(const ContinuedFraction& cf, const AnalyzeOptions& options) {
    AnalysisReport report;
    report.label = cf.label();
    report.rho_samples = worpitzky_parameters(cf, options.sample_depth);

    SymbolicLimit limit = symbolic_limit(cf);
    report.rho_closed_form = limit.rho_tail;
    report.L = limit.L;

    const Rational quarter(1, 4);
    if (!report.L) {
        report.classification = DiskClassification::unknown;
        report.flags.push_back(limit.reason == SymbolicLimit::Reason::unbounded
                                   ? "no Worpitzky limit: rho grows without bound"
                                   : "rho undefined on the tail: partial denominators "
                                     "are identically zero");
    } else {
        Rational abs_l = report.L->abs();
        if (abs_l < quarter) {
            report.classification = DiskClassification::interior;
        } else if (abs_l == quarter) {
            report.classification = DiskClassification::boundary;
        } else {
            report.classification = DiskClassification::exterior;
        }
        if (abs_l <= quarter) {
            report.sigma = convergence_factor(*report.L);
        }
        if (report.classification == DiskClassification::boundary) {
            report.flags.push_back("boundary contact: sigma = 1 provides no geometric rate");
        } else if (report.classification == DiskClassification::exterior) {
            report.flags.push_back(
                "L lies outside the disk |w| <= 1/4: no convergence guarantee "
                "from this criterion");
        } else if (report.L->is_zero()) {
            report.flags.push_back(
                "sigma = 0: error decays faster than any geometric rate");
        } else {
            const Rational* sr = std::get_if<Rational>(&*report.sigma);
            report.digits_per_10 =
                sr ? digits_per_iterations(*sr, 10)
                   : digits_per_iterations(std::get<HighPrecisionDecimal>(*report.sigma), 10);
        }
    }

    if (limit.rho_tail) {
        // Clamp so decaying rho (leading power below the requested order)
        // still expands instead of erroring out.
        int top = limit.rho_tail->is_zero() ? options.expansion_order
                                            : limit.rho_tail->degree_difference();
        report.rho_expansion =
            asymptotic_expand(*limit.rho_tail, std::min(options.expansion_order, top));
    }

    if (options.reference_value) {
        report.empirical_errors =
            error_sequence(cf, *options.reference_value, options.sample_depth);
        report.empirical_ratios = empirical_error_ratios(report.empirical_errors, 6);
    }

    if (report.rho_expansion) {
        for (const auto& [power, documented] : options.reference_rho_coefficients) {
            Rational computed = report.rho_expansion->coefficient_for(power);
            if (computed != documented) {
                report.flags.push_back("rho expansion coefficient at power " +
                                       std::to_string(power) + " computed as " +
                                       computed.to_string() + "; documented reference says " +
                                       documented.to_string());
            }
        }
    }

    if (report.sigma && report.empirical_ratios.size() >= 3) {
        Rational sigma_rat = std::holds_alternative<Rational>(*report.sigma)
                                 ? std::get<Rational>(*report.sigma)
                                 : std::get<HighPrecisionDecimal>(*report.sigma).to_rational();
        if (sigma_rat.sign() > 0 && sigma_rat < Rational(1)) {
            Rational last = report.empirical_ratios.back().to_rational();
            if ((last - sigma_rat).abs() * Rational(4) > sigma_rat) {
                report.flags.push_back(
                    "latest empirical error ratio " +
                    report.empirical_ratios.back().to_string() +
                    " deviates from sigma = " + sigma_rat.to_string() +
                    " by more than 25% (small-n transient or wrong reference)");
            }
        }
    }

    return report;
}

}  // namespace polycf
