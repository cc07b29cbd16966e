#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polycf/cli.hpp"

using namespace polycf;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints label, value, and stop depth") {
    RunResult r = run({"eval", "--preset", "conjecture-pi4", "--digits", "10"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "label = conjecture-pi4\n"
          "value = -0.7853981634\n"
          "depth = 27\n");
    CHECK(r.err.empty());
}

TEST_CASE("eval emits machine-readable form on request") {
    RunResult r = run({"eval", "--preset", "sqrt2", "--digits", "8", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"label\": \"sqrt2\""));
    CHECK(contains(r.out, "\"value\": \"1.41421356\""));
    CHECK(contains(r.out, "\"digits\": 8"));
    CHECK(contains(r.out, "\"depth\": 15"));
}

TEST_CASE("eval accepts an inline spec") {
    RunResult r = run({"eval", "--spec", "b0 = 1; a(n) = 1; b(n) = 2", "--digits", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "value = 1.414214"));
}

TEST_CASE("eval reads a spec file via the at prefix") {
    const char* path = "/tmp/polycf_cli_spec.txt";
    {
        std::ofstream f(path);
        f << "b0 = 1;\na(n) = 1;\nb(n) = 2\n";
    }
    RunResult r = run({"eval", "--spec", std::string("@") + path, "--digits", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "label = /tmp/polycf_cli_spec.txt"));
    CHECK(contains(r.out, "value = 1.414214"));

    RunResult missing = run({"eval", "--spec", "@/tmp/polycf_no_such_file.txt"});
    CHECK(missing.code == 1);
    CHECK(contains(missing.err, "cannot read spec file"));
}

TEST_CASE("eval rejects bad sources with exit 1") {
    RunResult unknown = run({"eval", "--preset", "nope"});
    CHECK(unknown.code == 1);
    CHECK(contains(unknown.err, "unknown preset 'nope'"));

    RunResult both = run({"eval", "--preset", "sqrt2", "--spec", "b0 = 0; a(n) = 1; b(n) = 1"});
    CHECK(both.code == 1);
    CHECK(contains(both.err, "exactly one of --preset or --spec"));

    RunResult neither = run({"eval"});
    CHECK(neither.code == 1);

    RunResult bad = run({"eval", "--spec", "b0 = 0; a(n) = { 1 for n in 1..4 }; b(n) = 1"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "parse error"));
    CHECK(contains(bad.err, "coverage gap"));
}

TEST_CASE("eval reports non-stabilizing fractions with exit 2") {
    RunResult r = run({"eval", "--preset", "oscillating", "--max-depth", "500"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "no convergence"));
    CHECK(contains(r.err, "last approximants"));
}

TEST_CASE("table renders csv rows with digit counts") {
    RunResult r = run({"table", "--preset", "conjecture-pi4", "--rows", "5,10",
                       "--reference", "minus_pi_over_4", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row5, row10;
    std::getline(lines, header);
    std::getline(lines, row5);
    std::getline(lines, row10);
    CHECK(header == "n,value,abs_error,digits,reference_error");
    CHECK(contains(row5, "5,"));
    CHECK(contains(row5, "1.52e-04"));
    CHECK(contains(row5, ",9.56e-05"));
    CHECK(contains(row10, "6.20e-07"));
    CHECK(contains(row10, ",4.37e-08"));
}

TEST_CASE("table bracket mode reports documented errors side by side") {
    RunResult r = run({"table", "--preset", "conjecture-pi4", "--bracket",
                       "--reference", "minus_pi_over_4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "documented"));
    CHECK(contains(r.out, "note: documented error 9.56e-05 at n=5"));
    CHECK(contains(r.out, "no match within 10%"));
    // rows n-1 and n+1 joined the listing
    CHECK(contains(r.out, "\n     4 "));
    CHECK(contains(r.out, "\n    16 "));
}

TEST_CASE("table accepts a literal decimal reference") {
    RunResult r = run({"table", "--preset", "sqrt2", "--rows", "6", "--reference",
                       "1.41421356237309504880168872420969807856967187537695"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1.24e-05"));
    RunResult bad = run({"table", "--preset", "sqrt2", "--rows", "6", "--reference", "x"});
    CHECK(bad.code == 1);
    RunResult empty_rows =
        run({"table", "--preset", "sqrt2", "--rows", ",", "--reference", "2"});
    CHECK(empty_rows.code == 1);
    CHECK(contains(empty_rows.err, "row list"));
}

TEST_CASE("gauss prints the ladder and the induced fraction") {
    RunResult r = run({"gauss", "1/2", "0", "1/2", "-1", "--count", "4",
                       "--max-depth", "800"});
    CHECK(r.code == 2);  // this famous specialization never stabilizes
    CHECK(contains(r.out, "d = 1/3 4/15 9/35 16/63"));
    CHECK(contains(r.out, "label = gauss(1/2,0,1/2,-1)"));
    CHECK(contains(r.out, "cf = b0 = 0; a(n) = { 1 for n in 1..1;"));
    CHECK(contains(r.err, "no convergence"));

    RunResult merged = run({"gauss", "1", "1/2", "3/2", "1/2", "--digits", "8"});
    CHECK(merged.code == 0);
    CHECK(contains(merged.out, "value = "));
    CHECK(contains(merged.out, "depth = "));

    RunResult apart = run({"gauss", "1", "1", "2", "1"});
    CHECK(apart.code == 1);
    CHECK(contains(apart.err, "no single closed-form rule"));

    RunResult badc = run({"gauss", "1", "1", "0", "1"});
    CHECK(badc.code == 1);
}

TEST_CASE("gauss json failure carries the last approximants") {
    RunResult r = run({"gauss", "1/2", "0", "1/2", "-1", "--max-depth", "600",
                       "--format", "json"});
    CHECK(r.code == 2);
    CHECK(contains(r.out, "\"error\""));
    CHECK(contains(r.out, "\"last_approximants\""));
    CHECK(contains(r.out, "\"d\""));
}

TEST_CASE("transform applies a scaling and verifies invariance") {
    RunResult r = run({"transform", "--preset", "gauss-kernel", "--scaling",
                       "r(n) = { 1 for n in 0..0; -(3*n-2) for n >= 1 }"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "tilde_a = -1 -4/3 -112/15 -18 -2080/63"));
    CHECK(contains(r.out, "invariance = ok for n = 1..30"));
    CHECK(contains(r.out, "label = gauss-kernel-rescaled"));

    RunResult bad_scale = run({"transform", "--preset", "sqrt2", "--scaling", "r(n) = 2"});
    CHECK(bad_scale.code == 1);
}

TEST_CASE("analyze text output carries the classification verdict") {
    RunResult r = run({"analyze", "--preset", "conjecture-pi4", "--samples", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "L = -2/9"));
    CHECK(contains(r.out, "classification = interior"));
    CHECK(contains(r.out, "sigma = 1/2"));
    CHECK(contains(r.out, "digits_per_10 = 3.010300"));
    CHECK(contains(r.out, "rho[2] = 1/4"));

    RunResult rim = run({"analyze", "--preset", "gauss-kernel", "--samples", "4"});
    CHECK(rim.code == 0);
    CHECK(contains(rim.out, "classification = boundary"));
    CHECK(contains(rim.out, "flag: boundary contact"));
}

TEST_CASE("analyze json is deterministic byte for byte") {
    std::vector<std::string> args = {"analyze", "--preset", "conjecture-pi4",
                                     "--reference", "minus_pi_over_4", "--format", "json"};
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "\"L\": \"-2/9\""));
    CHECK(contains(first.out, "\"classification\": \"interior\""));
    CHECK(contains(first.out, "\"sigma\": \"1/2\""));
    CHECK(contains(first.out, "\"rho_expansion\""));
    CHECK(contains(first.out, "\"empirical\""));
}

TEST_CASE("presets lists every built-in fraction") {
    RunResult r = run({"presets"});
    CHECK(r.code == 0);
    for (const char* name :
         {"conjecture-pi4", "gauss-kernel", "exact-transformed", "sqrt2", "oscillating"}) {
        CHECK(contains(r.out, name));
    }
    RunResult j = run({"presets", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(contains(j.out, "\"name\": \"conjecture-pi4\""));
    CHECK(contains(j.out, "\"spec\": \"b0 = 0;"));
}

TEST_CASE("usage errors and help flow through the argument parser") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage"));

    RunResult sub_help = run({"eval", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(contains(sub_help.out, "--digits"));

    RunResult none = run({});
    CHECK(none.code == 1);

    RunResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 1);

    RunResult badflag = run({"eval", "--preset", "sqrt2", "--frobnicate"});
    CHECK(badflag.code == 1);

    RunResult badformat = run({"eval", "--preset", "sqrt2", "--format", "xml"});
    CHECK(badformat.code == 1);

    RunResult baddigits = run({"eval", "--preset", "sqrt2", "--digits", "0"});
    CHECK(baddigits.code == 1);
}
