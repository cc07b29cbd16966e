#include "polycf/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "polycf/analysis.hpp"
#include "polycf/dsl.hpp"
#include "polycf/gauss.hpp"
#include "polycf/pi_quarter.hpp"
#include "polycf/presets.hpp"

namespace polycf {

namespace {

using nlohmann::ordered_json;

struct Source {
    ContinuedFraction cf;
    const Preset* preset = nullptr;  // set when --preset was used
};

std::string read_spec_text(const std::string& spec, std::string& origin) {
    if (!spec.empty() && spec[0] == '@') {
        std::string path = spec.substr(1);
        std::ifstream in(path);
        if (!in) {
            throw Error("cannot read spec file '" + path + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        origin = path;
        return buf.str();
    }
    origin = "<inline>";
    return spec;
}

Source resolve_fraction(const std::string& preset, const std::string& spec) {
    if (preset.empty() == spec.empty()) {
        throw ParameterError("provide exactly one of --preset or --spec");
    }
    if (!preset.empty()) {
        const Preset* p = find_preset(preset);
        if (!p) {
            throw ParameterError("unknown preset '" + preset + "'");
        }
        return Source{build_preset(preset), p};
    }
    std::string origin;
    std::string text = read_spec_text(spec, origin);
    return Source{dsl::parse_cf_spec(text, origin), nullptr};
}

ScalingSequence resolve_scaling(const std::string& spec) {
    std::string origin;
    std::string text = read_spec_text(spec, origin);
    return dsl::parse_scaling_spec(text, origin);
}

// Named references backed by the checked pi/4 oracle, or a literal decimal.
HighPrecisionDecimal resolve_reference(const std::string& name, int digits) {
    if (name == "pi_over_4") return pi_quarter(digits);
    if (name == "minus_pi_over_4") return -pi_quarter(digits);
    return HighPrecisionDecimal::parse(name);
}

std::vector<std::int64_t> parse_rows(const std::string& text) {
    std::vector<std::int64_t> rows;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ParameterError("invalid row list entry '" + item + "'");
        }
        if (used != item.size() || v < 1) {
            throw ParameterError("invalid row list entry '" + item + "'");
        }
        rows.push_back(v);
    }
    if (rows.empty()) {
        throw ParameterError("row list is empty");
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::string classification_note(DiskClassification c) {
    switch (c) {
        case DiskClassification::interior:
            return "convergence guaranteed, geometric error decay";
        case DiskClassification::boundary:
            return "rim contact: no geometric rate from this criterion";
        case DiskClassification::exterior:
            return "no convergence guarantee from this criterion";
        case DiskClassification::unknown:
            return "no tail limit available";
    }
    return "";
}

std::string sigma_to_string(const ConvergenceFactor& sigma, bool fraction_form) {
    if (const Rational* r = std::get_if<Rational>(&sigma)) {
        return fraction_form ? r->to_fraction_string() : r->to_string();
    }
    return std::get<HighPrecisionDecimal>(sigma).to_string();
}

std::string expansion_to_text(const AsymptoticExpansion& e) {
    std::string out;
    for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
        const Rational& c = e.coefficients[i];
        if (c.is_zero()) continue;
        int power = e.top_degree - static_cast<int>(i);
        std::string mag = c.abs().to_string();
        if (out.empty()) {
            out = c.is_negative() ? "-" + mag : mag;
        } else {
            out += c.is_negative() ? " - " + mag : " + " + mag;
        }
        if (power == 1) {
            out += "*n";
        } else if (power != 0) {
            out += "*n^" + std::to_string(power);
        }
    }
    return out.empty() ? "0" : out;
}

ordered_json expansion_to_json(const AsymptoticExpansion& e) {
    ordered_json j;
    j["top_degree"] = e.top_degree;
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : e.coefficients) coeffs.push_back(c.to_fraction_string());
    j["coefficients"] = std::move(coeffs);
    return j;
}

void dump_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// ---------- eval ----------

struct EvalArgs {
    std::string preset, spec, format = "text";
    int digits = 10;
    std::int64_t max_depth = 100000;
};

int cmd_eval(const EvalArgs& args, std::ostream& out) {
    Source src = resolve_fraction(args.preset, args.spec);
    Evaluation ev = evaluate(src.cf, args.digits, args.max_depth);
    HighPrecisionDecimal shown = ev.value.round_to(args.digits);
    if (args.format == "json") {
        ordered_json j;
        j["label"] = src.cf.label();
        j["value"] = shown.to_string();
        j["digits"] = args.digits;
        j["depth"] = ev.depth;
        dump_json(out, j);
    } else {
        out << "label = " << src.cf.label() << "\n";
        out << "value = " << shown.to_string() << "\n";
        out << "depth = " << ev.depth << "\n";
    }
    return 0;
}

// ---------- table ----------

struct TableArgs {
    std::string preset, spec, rows = "5,10,15", reference, format = "text";
    int reference_digits = 60;
    bool bracket = false;
};

struct TableRow {
    std::int64_t n = 0;
    std::optional<Rational> value;
    std::optional<HighPrecisionDecimal> abs_error;
    std::optional<std::string> reference_error;
};

std::string row_value_string(const TableRow& row) {
    if (!row.value) return "undef";
    return hp_from_rational(*row.value, 12).to_string();
}

std::string row_error_string(const TableRow& row) {
    if (!row.abs_error) return "";
    return row.abs_error->to_scientific(3);
}

std::string row_digits_string(const TableRow& row) {
    if (!row.abs_error) return "";
    if (row.abs_error->is_zero()) return "exact";
    return std::to_string(floor_neg_log10(*row.abs_error));
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
    Source src = resolve_fraction(args.preset, args.spec);
    HighPrecisionDecimal reference =
        resolve_reference(args.reference, args.reference_digits);
    std::vector<std::int64_t> rows = parse_rows(args.rows);
    if (args.bracket) {
        std::vector<std::int64_t> expanded;
        for (std::int64_t n : rows) {
            if (n > 1) expanded.push_back(n - 1);
            expanded.push_back(n);
            expanded.push_back(n + 1);
        }
        std::sort(expanded.begin(), expanded.end());
        expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
        rows = std::move(expanded);
    }

    std::vector<ErrorEntry> errors = error_sequence(src.cf, reference, rows.back());
    std::vector<TableRow> table;
    for (std::int64_t n : rows) {
        const ErrorEntry& e = errors[static_cast<std::size_t>(n - 1)];
        TableRow row;
        row.n = n;
        row.value = e.value;
        row.abs_error = e.abs_error;
        if (src.preset) {
            for (const auto& [rn, rs] : src.preset->reference_errors) {
                if (rn == n) row.reference_error = rs;
            }
        }
        table.push_back(std::move(row));
    }

    // Side-by-side check against documented errors: reported, never asserted.
    std::vector<std::string> notes;
    if (args.bracket && src.preset) {
        for (const auto& [rn, rs] : src.preset->reference_errors) {
            Rational documented = HighPrecisionDecimal::parse(rs).to_rational();
            if (documented.is_zero()) continue;
            std::string computed_here = "undef";
            std::optional<std::int64_t> match;
            for (std::int64_t shift = -1; shift <= 1; ++shift) {
                std::int64_t n = rn + shift;
                if (n < 1 || n > static_cast<std::int64_t>(errors.size())) continue;
                const auto& e = errors[static_cast<std::size_t>(n - 1)];
                if (!e.abs_error) continue;
                if (shift == 0) computed_here = e.abs_error->to_scientific(3);
                Rational c = e.abs_error->to_rational();
                if ((c - documented).abs() * Rational(10) <= documented) {
                    match = shift;
                }
            }
            std::string note = "documented error " + rs + " at n=" + std::to_string(rn) +
                               "; computed " + computed_here +
                               (match ? "; nearest match at offset " + std::to_string(*match) +
                                            " within 10%"
                                      : "; no match within 10% at offsets -1..+1");
            notes.push_back(std::move(note));
        }
    }

    if (args.format == "json") {
        ordered_json j;
        j["label"] = src.cf.label();
        j["reference"] = reference.to_string();
        ordered_json jrows = ordered_json::array();
        for (const TableRow& row : table) {
            ordered_json r;
            r["n"] = row.n;
            r["value"] = row.value ? ordered_json(row_value_string(row)) : ordered_json(nullptr);
            r["abs_error"] =
                row.abs_error ? ordered_json(row_error_string(row)) : ordered_json(nullptr);
            if (row.abs_error && !row.abs_error->is_zero()) {
                r["digits"] = floor_neg_log10(*row.abs_error);
            } else {
                r["digits"] = nullptr;
            }
            r["reference_error"] = row.reference_error ? ordered_json(*row.reference_error)
                                                       : ordered_json(nullptr);
            jrows.push_back(std::move(r));
        }
        j["rows"] = std::move(jrows);
        j["flags"] = notes;
        dump_json(out, j);
        return 0;
    }

    if (args.format == "csv") {
        out << "n,value,abs_error,digits,reference_error\n";
        for (const TableRow& row : table) {
            out << row.n << "," << (row.value ? row_value_string(row) : "") << ","
                << row_error_string(row) << "," << row_digits_string(row) << ","
                << (row.reference_error ? *row.reference_error : "") << "\n";
        }
        for (const std::string& note : notes) err << "note: " << note << "\n";
        return 0;
    }

    out << "label = " << src.cf.label() << "\n";
    out << "reference = " << reference.round_to(20).to_string() << "...\n";
    out << std::setw(6) << "n" << "  " << std::setw(16) << "value" << "  " << std::setw(10)
        << "abs_error" << "  " << std::setw(6) << "digits" << "  " << std::setw(10)
        << "documented" << "\n";
    for (const TableRow& row : table) {
        out << std::setw(6) << row.n << "  " << std::setw(16) << row_value_string(row)
            << "  " << std::setw(10) << row_error_string(row) << "  " << std::setw(6)
            << row_digits_string(row) << "  " << std::setw(10)
            << (row.reference_error ? *row.reference_error : "") << "\n";
    }
    for (const std::string& note : notes) out << "note: " << note << "\n";
    return 0;
}

// ---------- gauss ----------

struct GaussArgs {
    std::string a, b, c, z, format = "text";
    int count = 20;
    int digits = 6;
    std::int64_t max_depth = 100000;
};

int cmd_gauss(const GaussArgs& args, std::ostream& out, std::ostream& err) {
    GaussParameters params(Rational::parse(args.a), Rational::parse(args.b),
                           Rational::parse(args.c), Rational::parse(args.z));
    std::vector<Rational> d = gauss_coefficients(params, args.count);

    if (args.format == "json") {
        ordered_json j;
        ordered_json jd = ordered_json::array();
        for (const Rational& v : d) jd.push_back(v.to_fraction_string());
        j["d"] = std::move(jd);
        ContinuedFraction cf = gauss_cf(params);
        j["label"] = cf.label();
        j["cf"] = dsl::to_dsl(cf);
        try {
            Evaluation ev = evaluate(cf, args.digits, args.max_depth);
            j["value"] = ev.value.round_to(args.digits).to_string();
            j["depth"] = ev.depth;
        } catch (const NoConvergenceError& e) {
            j["error"] = e.what();
            ordered_json last = ordered_json::array();
            for (const std::string& v : e.last_values()) last.push_back(v);
            j["last_approximants"] = std::move(last);
            dump_json(out, j);
            return 2;
        }
        dump_json(out, j);
        return 0;
    }

    out << "d =";
    for (const Rational& v : d) out << " " << v.to_string();
    out << "\n";
    ContinuedFraction cf = gauss_cf(params);
    out << "label = " << cf.label() << "\n";
    out << "cf = " << dsl::to_dsl(cf) << "\n";
    try {
        Evaluation ev = evaluate(cf, args.digits, args.max_depth);
        out << "value = " << ev.value.round_to(args.digits).to_string() << "\n";
        out << "depth = " << ev.depth << "\n";
    } catch (const NoConvergenceError& e) {
        err << "no convergence: " << e.what() << "\n";
        if (!e.last_values().empty()) {
            err << "last approximants:";
            for (const std::string& v : e.last_values()) err << " " << v;
            err << "\n";
        }
        return 2;
    }
    return 0;
}

// ---------- transform ----------

struct TransformArgs {
    std::string preset, spec, scaling, format = "text";
    std::int64_t depth = 30;
};

int cmd_transform(const TransformArgs& args, std::ostream& out) {
    Source src = resolve_fraction(args.preset, args.spec);
    ScalingSequence scaling = resolve_scaling(args.scaling);
    ContinuedFraction transformed = apply_equivalence(src.cf, scaling);
    InvarianceReport inv = verify_invariance(src.cf, scaling, args.depth);

    std::vector<Rational> heads;
    for (std::int64_t n = 1; n <= 5; ++n) heads.push_back(transformed.a_at(n));

    if (args.format == "json") {
        ordered_json j;
        j["label"] = transformed.label();
        ordered_json ja = ordered_json::array();
        for (const Rational& v : heads) ja.push_back(v.to_fraction_string());
        j["tilde_a"] = std::move(ja);
        j["cf"] = dsl::to_dsl(transformed);
        ordered_json ji;
        ji["depth"] = args.depth;
        ji["all_equal"] = inv.all_equal;
        ordered_json mism = ordered_json::array();
        for (const InvarianceRow& row : inv.rows) {
            if (!row.equal) mism.push_back(row.n);
        }
        ji["mismatches"] = std::move(mism);
        j["invariance"] = std::move(ji);
        dump_json(out, j);
        return 0;
    }

    out << "label = " << transformed.label() << "\n";
    out << "tilde_a =";
    for (const Rational& v : heads) out << " " << v.to_string();
    out << "\n";
    out << "cf = " << dsl::to_dsl(transformed) << "\n";
    if (inv.all_equal) {
        out << "invariance = ok for n = 1.." << args.depth << "\n";
    } else {
        out << "invariance = FAILED at";
        for (const InvarianceRow& row : inv.rows) {
            if (!row.equal) out << " n=" << row.n;
        }
        out << "\n";
    }
    return 0;
}

// ---------- analyze ----------

struct AnalyzeArgs {
    std::string preset, spec, reference, format = "text";
    std::int64_t samples = 20;
    int reference_digits = 40;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
    Source src = resolve_fraction(args.preset, args.spec);
    AnalyzeOptions options;
    options.sample_depth = args.samples;
    if (src.preset) {
        options.reference_rho_coefficients = src.preset->reference_rho_coefficients;
    }
    if (!args.reference.empty()) {
        options.reference_value = resolve_reference(args.reference, args.reference_digits);
    }
    AnalysisReport rep = analyze(src.cf, options);

    if (args.format == "json") {
        ordered_json j;
        j["label"] = rep.label;
        j["L"] = rep.L ? ordered_json(rep.L->to_fraction_string()) : ordered_json(nullptr);
        j["classification"] = to_string(rep.classification);
        j["sigma"] =
            rep.sigma ? ordered_json(sigma_to_string(*rep.sigma, true)) : ordered_json(nullptr);
        j["digits_per_10"] = rep.digits_per_10 ? ordered_json(rep.digits_per_10->to_string())
                                               : ordered_json(nullptr);
        ordered_json samples = ordered_json::array();
        for (const RhoSample& s : rep.rho_samples) {
            ordered_json js;
            js["n"] = s.n;
            js["rho"] = s.rho ? ordered_json(s.rho->to_fraction_string()) : ordered_json(nullptr);
            samples.push_back(std::move(js));
        }
        j["rho_samples"] = std::move(samples);
        j["rho_expansion"] = rep.rho_expansion ? expansion_to_json(*rep.rho_expansion)
                                               : ordered_json(nullptr);
        ordered_json emp;
        ordered_json en = ordered_json::array();
        ordered_json ee = ordered_json::array();
        ordered_json er = ordered_json::array();
        for (const ErrorEntry& e : rep.empirical_errors) {
            if (!e.abs_error) continue;
            en.push_back(e.n);
            ee.push_back(e.abs_error->to_scientific(3));
        }
        for (const HighPrecisionDecimal& r : rep.empirical_ratios) {
            er.push_back(r.to_string());
        }
        emp["n"] = std::move(en);
        emp["error"] = std::move(ee);
        emp["ratio"] = std::move(er);
        j["empirical"] = std::move(emp);
        j["flags"] = rep.flags;
        dump_json(out, j);
        return 0;
    }

    out << "label = " << rep.label << "\n";
    out << "L = " << (rep.L ? rep.L->to_string() : "none") << "\n";
    out << "classification = " << to_string(rep.classification) << " ("
        << classification_note(rep.classification) << ")\n";
    out << "sigma = " << (rep.sigma ? sigma_to_string(*rep.sigma, false) : "none") << "\n";
    out << "digits_per_10 = "
        << (rep.digits_per_10 ? rep.digits_per_10->to_string() : "none") << "\n";
    if (rep.rho_closed_form) {
        out << "rho_closed_form = " << rep.rho_closed_form->to_expression_string() << "\n";
    }
    if (rep.rho_expansion) {
        out << "rho_expansion = " << expansion_to_text(*rep.rho_expansion) << "\n";
    }
    for (const RhoSample& s : rep.rho_samples) {
        out << "rho[" << s.n << "] = " << (s.rho ? s.rho->to_string() : "undef") << "\n";
    }
    for (const ErrorEntry& e : rep.empirical_errors) {
        if (!e.abs_error) continue;
        out << "err[" << e.n << "] = " << e.abs_error->to_scientific(3) << "\n";
    }
    if (!rep.empirical_ratios.empty()) {
        out << "ratios =";
        for (const HighPrecisionDecimal& r : rep.empirical_ratios) {
            out << " " << r.to_string();
        }
        out << "\n";
    }
    for (const std::string& f : rep.flags) out << "flag: " << f << "\n";
    return 0;
}

// ---------- presets ----------

int cmd_presets(const std::string& format, std::ostream& out) {
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const Preset& p : all_presets()) {
            ordered_json jp;
            jp["name"] = p.name;
            jp["summary"] = p.summary;
            jp["spec"] = dsl::to_dsl(build_preset(p.name));
            j.push_back(std::move(jp));
        }
        dump_json(out, j);
        return 0;
    }
    for (const Preset& p : all_presets()) {
        out << p.name << "\n";
        out << "  " << p.summary << "\n";
        out << "  " << dsl::to_dsl(build_preset(p.name)) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polynomial-coefficient continued fraction toolkit"};
    app.name("polycf");
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a fraction to fixed digits");
    eval_cmd->add_option("--preset", eval_args.preset, "built-in fraction name");
    eval_cmd->add_option("--spec", eval_args.spec, "inline DSL text or @path");
    eval_cmd->add_option("--digits", eval_args.digits, "target decimal places")
        ->check(CLI::Range(1, 200));
    eval_cmd->add_option("--max-depth", eval_args.max_depth, "recurrence depth limit")
        ->check(CLI::Range(std::int64_t{3}, std::int64_t{100000000}));
    eval_cmd->add_option("--format", eval_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    TableArgs table_args;
    CLI::App* table_cmd =
        app.add_subcommand("table", "convergent error table against a reference");
    table_cmd->add_option("--preset", table_args.preset, "built-in fraction name");
    table_cmd->add_option("--spec", table_args.spec, "inline DSL text or @path");
    table_cmd->add_option("--rows", table_args.rows, "comma-separated depths");
    table_cmd
        ->add_option("--reference", table_args.reference,
                     "pi_over_4, minus_pi_over_4, or a decimal literal")
        ->required();
    table_cmd
        ->add_option("--reference-digits", table_args.reference_digits,
                     "precision for named references")
        ->check(CLI::Range(10, 500));
    table_cmd->add_flag("--bracket", table_args.bracket,
                        "add rows at n-1 and n+1 and compare documented errors");
    table_cmd->add_option("--format", table_args.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    GaussArgs gauss_args;
    CLI::App* gauss_cmd =
        app.add_subcommand("gauss", "hypergeometric-ratio fraction from (a, b; c; z)");
    gauss_cmd->add_option("a", gauss_args.a, "parameter a, e.g. 1/2")->required();
    gauss_cmd->add_option("b", gauss_args.b, "parameter b")->required();
    gauss_cmd->add_option("c", gauss_args.c, "parameter c")->required();
    gauss_cmd->add_option("z", gauss_args.z, "argument z")->required();
    gauss_cmd->add_option("--count", gauss_args.count, "coefficients to print")
        ->check(CLI::Range(1, 1000));
    gauss_cmd->add_option("--digits", gauss_args.digits, "target decimal places")
        ->check(CLI::Range(1, 200));
    gauss_cmd->add_option("--max-depth", gauss_args.max_depth, "recurrence depth limit")
        ->check(CLI::Range(std::int64_t{3}, std::int64_t{100000000}));
    gauss_cmd->add_option("--format", gauss_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    TransformArgs transform_args;
    CLI::App* transform_cmd =
        app.add_subcommand("transform", "apply an equivalence rescaling");
    transform_cmd->add_option("--preset", transform_args.preset, "built-in fraction name");
    transform_cmd->add_option("--spec", transform_args.spec, "inline DSL text or @path");
    transform_cmd
        ->add_option("--scaling", transform_args.scaling, "scaling DSL text or @path")
        ->required();
    transform_cmd->add_option("--depth", transform_args.depth, "invariance check depth")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{5000}));
    transform_cmd->add_option("--format", transform_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    AnalyzeArgs analyze_args;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "tail-coefficient convergence analysis");
    analyze_cmd->add_option("--preset", analyze_args.preset, "built-in fraction name");
    analyze_cmd->add_option("--spec", analyze_args.spec, "inline DSL text or @path");
    analyze_cmd->add_option("--samples", analyze_args.samples, "rho sample depth")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
    analyze_cmd->add_option("--reference", analyze_args.reference,
                            "optional reference value for empirical errors");
    analyze_cmd
        ->add_option("--reference-digits", analyze_args.reference_digits,
                     "precision for named references")
        ->check(CLI::Range(10, 500));
    analyze_cmd->add_option("--format", analyze_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string presets_format = "text";
    CLI::App* presets_cmd = app.add_subcommand("presets", "list built-in fractions");
    presets_cmd->add_option("--format", presets_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("polycf");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(eval_args, out);
        if (table_cmd->parsed()) return cmd_table(table_args, out, err);
        if (gauss_cmd->parsed()) return cmd_gauss(gauss_args, out, err);
        if (transform_cmd->parsed()) return cmd_transform(transform_args, out);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_args, out);
        if (presets_cmd->parsed()) return cmd_presets(presets_format, out);
        err << "error: no command given\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const NoConvergenceError& e) {
        err << "no convergence: " << e.what() << "\n";
        if (!e.last_values().empty()) {
            err << "last approximants:";
            for (const std::string& v : e.last_values()) err << " " << v;
            err << "\n";
        }
        return 2;
    } catch (const OracleInconsistencyError& e) {
        err << "oracle inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polycf
