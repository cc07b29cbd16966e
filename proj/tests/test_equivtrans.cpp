#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polycf/dsl.hpp"
#include "polycf/equivalence.hpp"
#include "polycf/presets.hpp"

using namespace polycf;

namespace {

ScalingSequence scaling_from(const std::string& text) {
    return dsl::parse_scaling_spec(text, "test");
}

}  // namespace

TEST_CASE("scaling sequences must start at 0 with r(0) = 1 and never vanish") {
    RationalFunction one(Polynomial(Rational(1)));
    CHECK_THROWS_AS(ScalingSequence(PiecewiseSequence::single(1, one)), ScalingError);
    CHECK_THROWS_AS(
        ScalingSequence(PiecewiseSequence::single(0, RationalFunction(Polynomial(Rational(2))))),
        ScalingError);
    // r(n) = n - 3 would start at r(0) = -3 and also vanish at n = 3
    CHECK_THROWS_AS(scaling_from("r(n) = { 1 for n in 0..0; n - 3 for n >= 1 }"),
                    ScalingError);
    CHECK_NOTHROW(scaling_from("r(n) = 1"));
    CHECK_NOTHROW(scaling_from("r(n) = { 1 for n in 0..0; -(3*n-2) for n >= 1 }"));
}

TEST_CASE("scaling accessor evaluates the sequence") {
    ScalingSequence r = integerizing_scaling();
    CHECK(r.at(0) == Rational(1));
    CHECK(r.at(1) == Rational(-1));
    CHECK(r.at(2) == Rational(-4));
    CHECK(r.at(5) == Rational(-13));
}

TEST_CASE("rescaling the flagship fraction yields the pinned heads") {
    ContinuedFraction kernel = build_preset("gauss-kernel");
    ContinuedFraction tilde = apply_equivalence(kernel, integerizing_scaling());
    CHECK(tilde.label() == "gauss-kernel-rescaled");
    CHECK(tilde.head() == kernel.head());
    CHECK(tilde.a_at(1) == Rational(-1));
    CHECK(tilde.a_at(2) == Rational(-4, 3));
    CHECK(tilde.a_at(3) == Rational(-112, 15));
    CHECK(tilde.a_at(4) == Rational(-18));
    CHECK(tilde.a_at(5) == Rational(-2080, 63));
    CHECK(tilde.b_at(1) == Rational(-1));
    CHECK(tilde.b_at(2) == Rational(-4));
    for (std::int64_t n = 3; n <= 40; ++n) {
        CHECK(tilde.b_at(n) == Rational(-(3 * n - 2)));
    }
}

TEST_CASE("the symbolic construction matches the pinned closed form") {
    ContinuedFraction tilde =
        apply_equivalence(build_preset("gauss-kernel"), integerizing_scaling());
    for (std::int64_t n = 2; n <= 200; ++n) {
        CHECK(tilde.a_at(n) == exact_tilde_numerator(n));
    }
    CHECK_THROWS_AS(exact_tilde_numerator(1), OutOfDomainError);
}

TEST_CASE("the rescaled preset is the rescaled kernel") {
    CHECK(build_preset("exact-transformed") ==
          apply_equivalence(build_preset("gauss-kernel"), integerizing_scaling()));
}

TEST_CASE("rescaling preserves every convergent value") {
    ContinuedFraction kernel = build_preset("gauss-kernel");
    InvarianceReport report = verify_invariance(kernel, integerizing_scaling(), 60);
    CHECK(report.all_equal);
    REQUIRE(report.rows.size() == 60);
    for (const InvarianceRow& row : report.rows) {
        CHECK(row.equal);
        REQUIRE(row.original.has_value());
        CHECK(*row.original == *row.transformed);
    }
}

TEST_CASE("rescaling by ones materializes heads but keeps all values") {
    ContinuedFraction cf = build_preset("conjecture-pi4");
    ScalingSequence ones = scaling_from("r(n) = 1");
    ContinuedFraction same = apply_equivalence(cf, ones);
    for (std::int64_t n = 1; n <= 30; ++n) {
        CHECK(same.a_at(n) == cf.a_at(n));
        CHECK(same.b_at(n) == cf.b_at(n));
    }
    CHECK(verify_invariance(cf, ones, 30).all_equal);
}

TEST_CASE("a tail of minus ones flips every coefficient sign but no value") {
    // r = (1, -1, -1, ...) negates b and a_1 while leaving a_n (n >= 2)
    // alone; the two sign changes cancel in the fold, so every convergent
    // keeps its value, which is the point of the transform
    ContinuedFraction cf = build_preset("conjecture-pi4");
    ScalingSequence flip = scaling_from("r(n) = { 1 for n in 0..0; -1 for n >= 1 }");
    ContinuedFraction flipped = apply_equivalence(cf, flip);
    CHECK(flipped.a_at(1) == -cf.a_at(1));
    for (std::int64_t n = 2; n <= 20; ++n) {
        CHECK(flipped.a_at(n) == cf.a_at(n));
        CHECK(flipped.b_at(n) == -cf.b_at(n));
    }
    std::vector<Convergent> orig = convergents(cf, 30);
    std::vector<Convergent> same = convergents(flipped, 30);
    for (std::size_t i = 0; i < orig.size(); ++i) {
        REQUIRE(orig[i].value.has_value());
        CHECK(*same[i].value == *orig[i].value);
    }
    // the numeric route agrees on the unchanged limit
    Evaluation e = evaluate(flipped, 10, 100000);
    CHECK(e.value.round_to(10).to_string() == "-0.7853981634");
}

TEST_CASE("rows where both recurrences skip count as equal") {
    ContinuedFraction osc = build_preset("oscillating");
    ScalingSequence flip = scaling_from("r(n) = { 1 for n in 0..0; -1 for n >= 1 }");
    InvarianceReport report = verify_invariance(osc, flip, 20);
    CHECK(report.all_equal);
    for (const InvarianceRow& row : report.rows) {
        CHECK(row.original.has_value() == (row.n % 2 == 0));
        CHECK(row.equal);
    }
}

TEST_CASE("rescaling a piecewise fraction cuts segments at every boundary") {
    ContinuedFraction cf = dsl::parse_cf_spec(
        "b0 = 2; a(n) = { 3 for n in 1..4; n^2 for n >= 5 }; b(n) = n", "seg");
    ScalingSequence r = scaling_from("r(n) = { 1 for n in 0..2; 2 for n in 3..6; n for n >= 7 }");
    ContinuedFraction t = apply_equivalence(cf, r);
    for (std::int64_t n = 1; n <= 40; ++n) {
        CHECK(t.b_at(n) == r.at(n) * cf.b_at(n));
        CHECK(t.a_at(n) == r.at(n) * r.at(n - 1) * cf.a_at(n));
    }
    CHECK(verify_invariance(cf, r, 40).all_equal);
}
