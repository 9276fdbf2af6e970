#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zetac/classify.hpp"
#include "zetac/dominance.hpp"
#include "zetac/parser.hpp"
#include "zetac/polar.hpp"
#include "zetac/printer.hpp"
#include "zetac/transform.hpp"

#include "../support/expr_gen.hpp"

using namespace zetac;

TEST_CASE("compare_modulus: reflexive pair is theta with unit ratios") {
    const DominanceVerdict v = compare_modulus(parse("n"), parse("n"), default_schedule());
    CHECK(v.relation == Dominance::ThetaEquivalent);
    CHECK(v.trend_slope == 0.0);
    REQUIRE(v.ratio_evidence.size() == 8);
    for (const RatioPoint& p : v.ratio_evidence) CHECK(p.ratio == 1.0);
}

TEST_CASE("compare_modulus: polynomial gap is strict both ways") {
    CHECK(compare_modulus(parse("n"), parse("n^2"), default_schedule()).relation ==
          Dominance::StrictlyDominated);
    CHECK(compare_modulus(parse("n^2"), parse("n"), default_schedule()).relation ==
          Dominance::StrictlyDominates);
}

TEST_CASE("compare_modulus: the motivating example is theta-equivalent to n^2") {
    const DominanceVerdict v =
        compare_modulus(parse("n*log(n)+i*n^2"), parse("n^2"), default_schedule());
    CHECK(v.relation == Dominance::ThetaEquivalent);
    for (const RatioPoint& p : v.ratio_evidence) {
        CHECK(p.ratio >= 0.99);
        CHECK(p.ratio <= 1.01);
    }
}

TEST_CASE("compare_modulus: log-factor separations get strict verdicts") {
    CHECK(compare_modulus(parse("n"), parse("n*log(n)"), default_schedule()).relation ==
          Dominance::StrictlyDominated);
    CHECK(compare_modulus(parse("1"), parse("log(n)"), default_schedule()).relation ==
          Dominance::StrictlyDominated);
    CHECK(compare_modulus(parse("n*log(n)"), parse("n"), default_schedule()).relation ==
          Dominance::StrictlyDominates);
}

TEST_CASE("compare_modulus: zero denominator on the tail raises") {
    CHECK_THROWS_AS(
        compare_modulus(parse("n"), parse("n-n"), SampleSchedule::geometric(2, 2, 4)),
        ZeroDenominatorError);
}

TEST_CASE("compare_modulus: both sides overflowed is honestly undetermined") {
    const DominanceVerdict v =
        compare_modulus(parse("2*2^n"), parse("2^n"), default_schedule());
    CHECK(v.relation == Dominance::Undetermined);
}

TEST_CASE("compare_modulus: antisymmetry and reflexivity across the catalog") {
    const auto catalog = testgen::growth_catalog();
    const SampleSchedule sched = default_schedule();
    for (const auto& [name1, f1] : catalog) {
        CAPTURE(name1);
        CHECK(compare_modulus(f1, f1, sched).relation == Dominance::ThetaEquivalent);
        for (const auto& [name2, f2] : catalog) {
            CAPTURE(name2);
            const Dominance fwd = compare_modulus(f1, f2, sched).relation;
            const Dominance rev = compare_modulus(f2, f1, sched).relation;
            CHECK((fwd == Dominance::StrictlyDominates) ==
                  (rev == Dominance::StrictlyDominated));
            CHECK((fwd == Dominance::ThetaEquivalent) ==
                  (rev == Dominance::ThetaEquivalent));
        }
    }
}

TEST_CASE("compare_modulus: verdicts survive constant scaling") {
    const auto catalog = testgen::growth_catalog();
    const SampleSchedule sched = default_schedule();
    for (double c : {2.0, 10.0}) {
        for (const auto& [name1, f1] : catalog) {
            for (const auto& [name2, f2] : catalog) {
                CAPTURE(name1);
                CAPTURE(name2);
                CAPTURE(c);
                const Dominance base = compare_modulus(f1, f2, sched).relation;
                const Dominance scaled =
                    compare_modulus(Expr::multiply(Expr::constant(c), f1), f2, sched)
                        .relation;
                if (base != Dominance::Undetermined && scaled != Dominance::Undetermined) {
                    CHECK(base == scaled);
                }
            }
        }
    }
}

TEST_CASE("check_big_o: classical containments") {
    const SampleSchedule sched = default_schedule();
    CHECK(check_big_o(parse("n"), parse("n^2"), sched).holds);
    CHECK_FALSE(check_big_o(parse("n^2"), parse("n"), sched).holds);
    const BigOResult mixed = check_big_o(parse("n*log(n)+i*n^2"), parse("n^2"), sched);
    CHECK(mixed.holds);
    CHECK(mixed.witness_constant == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("check_big_o: returned witness is pointwise sound") {
    const SampleSchedule sched = default_schedule();
    const BigOResult r = check_big_o(parse("n"), parse("n^2"), sched);
    REQUIRE(r.holds);
    for (std::int64_t n : sched.points()) {
        if (n < r.from_n) continue;
        const double lhs = decompose_at(parse("n"), n).g;
        const double rhs = r.witness_constant * decompose_at(parse("n^2"), n).g;
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("apply_general_notation: identity and direct construction") {
    CHECK(print_canonical(apply_general_notation(parse("n"), {1.0, 0.0})) == "n");
    CHECK(print_canonical(apply_general_notation(parse("n"), {2.0, 3.0})) == "2*n + 3");
    CHECK(evaluate(apply_general_notation(parse("n^2"), {3.0, 1.0}), 4).re == 49.0);
}

TEST_CASE("transform_to_real: affine inverse recovers the original") {
    const SampleSchedule sched = SampleSchedule::geometric(2, 2, 16);
    const ExprPtr back = transform_to_real(parse("2*n + 3"), {2.0, 3.0}, sched);
    CHECK(structurally_equal(back, parse("n")));
    for (std::int64_t n : sched.points()) {
        CHECK(evaluate(back, n).re == static_cast<double>(n));
    }
    CHECK(structurally_equal(transform_to_real(parse("n"), {1.0, 0.0}, sched), parse("n")));
}

TEST_CASE("transform_to_real: refusals") {
    const SampleSchedule sched = SampleSchedule::geometric(2, 2, 8);
    try {
        transform_to_real(parse("n + i*n"), {1.0, 0.0}, sched);
        FAIL_CHECK("expected NonRealComplexity");
    } catch (const TransformError& e) {
        CHECK(e.kind() == TransformErrorKind::NonRealComplexity);
        REQUIRE(e.witness_n().has_value());
        CHECK(*e.witness_n() == 2);
    }
    try {
        transform_to_real(parse("-n"), {1.0, 0.0}, sched);
        FAIL_CHECK("expected NegativeRealBranch");
    } catch (const TransformError& e) {
        CHECK(e.kind() == TransformErrorKind::NegativeRealBranch);
    }
    CHECK_THROWS_AS(transform_to_real(parse("n"), {0.0, 1.0}, sched), TransformError);
}

TEST_CASE("transform round trip: apply then invert is pointwise identity") {
    testgen::GenOptions opts;
    opts.allow_imaginary = false;
    opts.nonneg_real_only = true;
    testgen::ExprGen gen(512, opts);
    const SampleSchedule sched = SampleSchedule::geometric(2, 2, 16);
    const TransformParams params[] = {{1.0, 0.0}, {2.0, 3.0}, {0.5, 10.0}, {3.0, 0.25}};
    for (int trial = 0; trial < 25; ++trial) {
        const ExprPtr f = gen.next();
        for (const TransformParams& p : params) {
            const ExprPtr round = transform_to_real(apply_general_notation(f, p), p, sched);
            for (std::int64_t n : sched.points()) {
                const ComplexValue a = evaluate(f, n);
                const ComplexValue b = evaluate(round, n);
                CHECK(std::fabs(a.re - b.re) <= 1e-9 * (1.0 + std::fabs(a.re)));
                CHECK(b.im == 0.0);
            }
        }
    }
}

TEST_CASE("classify_zeta: catalog families at the default schedule") {
    const SampleSchedule sched = default_schedule();
    CHECK(classify_zeta(parse("5"), sched).family == GrowthFamily::Constant);
    CHECK(classify_zeta(parse("log(n)"), sched).family == GrowthFamily::Logarithmic);
    CHECK(classify_zeta(parse("log2(n)"), sched).family == GrowthFamily::Logarithmic);
    CHECK(classify_zeta(parse("n"), sched).family == GrowthFamily::Linear);
    CHECK(classify_zeta(parse("3*n+7"), sched).family == GrowthFamily::Linear);
    CHECK(classify_zeta(parse("n*log(n)"), sched).family == GrowthFamily::Linearithmic);

    const GrowthLabel cubic = classify_zeta(parse("n^3"), sched);
    CHECK(cubic.family == GrowthFamily::Polynomial);
    CHECK(cubic.degree == doctest::Approx(3.0).epsilon(1e-6));

    const GrowthLabel frac = classify_zeta(parse("n^2.5"), sched);
    CHECK(frac.family == GrowthFamily::Polynomial);
    CHECK(frac.degree == doctest::Approx(2.5).epsilon(1e-6));
}

TEST_CASE("classify_zeta: exponential wins via the log-linear fit") {
    // Also verify the oracle: ln g against n is linear with slope ln 2 and
    // tiny residual on an all-finite schedule.
    const SampleSchedule sched = SampleSchedule::geometric(2, 2, 8);
    CHECK(classify_zeta(parse("2^n"), sched).family == GrowthFamily::Exponential);
    double max_resid = 0.0;
    for (std::int64_t n : sched.points()) {
        const double lng = std::log(decompose_at(parse("2^n"), n).g);
        max_resid = std::max(max_resid,
                             std::fabs(lng - static_cast<double>(n) * std::log(2.0)));
    }
    CHECK(max_resid / (1.0 + 256.0 * std::log(2.0)) < 1e-6);
    // The overflowing default schedule still classifies from the finite prefix.
    CHECK(classify_zeta(parse("2^n"), default_schedule()).family ==
          GrowthFamily::Exponential);
}

TEST_CASE("classify_zeta: the motivating example is a degree-2 polynomial with phase pi/2") {
    const GrowthLabel label = classify_zeta(parse("n*log(n)+i*n^2"), default_schedule());
    CHECK(label.family == GrowthFamily::Polynomial);
    CHECK(label.degree >= 1.95);
    CHECK(label.degree <= 2.05);
    REQUIRE(label.limiting_phase.kind == PhaseLimitKind::ConvergesTo);
    CHECK(std::fabs(label.limiting_phase.value - std::numbers::pi / 2) <= 1e-3);
}

TEST_CASE("classify_zeta: purely real nonnegative functions have zero limiting phase") {
    for (const auto& [name, f] : testgen::growth_catalog()) {
        CAPTURE(name);
        const GrowthLabel label = classify_zeta(f, default_schedule());
        CHECK(label.limiting_phase.kind == PhaseLimitKind::ConvergesTo);
        CHECK(label.limiting_phase.value == 0.0);
    }
}
