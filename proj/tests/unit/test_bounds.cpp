#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "wavedecay/bounds.hpp"

using namespace wavedecay;

TEST_CASE("first lemma constants")
{
    const auto k = lemma1_constants(3.0, 2.0);
    CHECK(k.B == doctest::Approx(0.3125));
    CHECK(k.C == doctest::Approx(0.625));
    CHECK(k.nu == 1.0);
    CHECK(std::isnan(k.mu));

    const auto slow = lemma1_constants(2.5, 3.0);
    CHECK(slow.B == doctest::Approx(7.0 / 24.0));
    CHECK(slow.C == doctest::Approx(7.0 / 6.0));
    CHECK(slow.nu == 0.5);

    CHECK_THROWS_WITH_AS(lemma1_constants(2.0, 2.0), "requires p > 2", HypothesisError);
    CHECK_THROWS_WITH_AS(lemma1_constants(3.0, 1.0), "requires q > 1", HypothesisError);
    CHECK_THROWS_AS(lemma1_constants(NAN, 2.0), HypothesisError);
}

TEST_CASE("second lemma constants")
{
    const auto k = lemma2_constants(1.0, 3.0, 3.0);
    CHECK(k.mu == 2.0);
    CHECK(k.nu == 2.0);
    CHECK(k.B == doctest::Approx(0.6875));
    CHECK(k.C == doctest::Approx(1.375));
    CHECK_FALSE(k.closed_form_differs());

    const auto k2 = lemma2_constants(2.0, 2.0, 4.0);
    CHECK(k2.mu == 2.0);
    CHECK(k2.nu == 3.0);
    CHECK(k2.B == doctest::Approx(0.75));
    CHECK(k2.C == doctest::Approx(1.5));

    // nu < 1 keeps the max(1, 1/nu) factor
    const auto k3 = lemma2_constants(0.1, 1.5, 3.0);
    CHECK(k3.nu == doctest::Approx(0.6));
    CHECK(k3.closed_form_differs());
    CHECK(k3.C == doctest::Approx(k3.closed_form_C / 0.6));

    CHECK_THROWS_WITH_AS(lemma2_constants(1.0, 3.0, 2.0), "requires lambda > 2", HypothesisError);
    CHECK_THROWS_WITH_AS(lemma2_constants(1.0, 1.0, 3.0), "requires q > 1", HypothesisError);
    CHECK_THROWS_AS(lemma2_constants(0.0, 3.0, 3.0), HypothesisError);
}

TEST_CASE("I1 of the first lemma")
{
    CHECK(check_I1_lemma1(0.0, 0.0, 2.0, 1e-10).value == 0.0);
    const auto wide = check_I1_lemma1(1e3, 1e3, 2.0, 1e-10);
    CHECK(wide.pass);
    CHECK(wide.value == doctest::Approx(2.0 - 2.0 / 1001.0).epsilon(1e-11));
    CHECK(wide.bound == 2.0);
    const auto mixed = check_I1_lemma1(5.0, -2.0, 3.0, 1e-10);
    CHECK(mixed.pass);
    CHECK(mixed.value == doctest::Approx(1.0 / 24.0).epsilon(1e-11));
}

TEST_CASE("I2 of the first lemma")
{
    const auto empty = check_I2_lemma1(3.0, 3.0, 3.0, 1e-10);
    CHECK(empty.pass);
    CHECK(empty.value == 0.0);
    const auto tail = check_I2_lemma1(1e3, 0.0, 3.0, 1e-10);
    CHECK(tail.pass);
    CHECK(tail.value == doctest::Approx(0.5 - 1.0 / 1001.0 + 0.5 / (1001.0 * 1001.0)).epsilon(1e-11));
    CHECK(tail.bound == 0.5);
    const auto quartic = check_I2_lemma1(10.0, -2.0, 4.0, 1e-10, 3.0);
    CHECK(quartic.pass);
    CHECK(quartic.value == doctest::Approx(0.0393280834052183914).epsilon(1e-10));
    CHECK(quartic.bound == doctest::Approx(1.0 / 6.0));
    REQUIRE(quartic.alternate_bound.has_value());
    CHECK(*quartic.alternate_bound == doctest::Approx(0.5));
    CHECK_THROWS_AS(check_I2_lemma1(3.0, 1.0, 2.0, 1e-10), HypothesisError);
}

TEST_CASE("elementary inequality")
{
    const auto eq = check_elementary_inequality(1.0, 0.5);
    CHECK(eq.pass);
    CHECK(eq.value == eq.bound);
    const auto edge = check_elementary_inequality(3.0, 0.0);
    CHECK(edge.value == 1.0);
    CHECK(edge.bound == 3.0);
    const auto root = check_elementary_inequality(0.5, 0.25);
    CHECK(root.value == doctest::Approx(0.5));
    CHECK(root.bound == doctest::Approx(0.75));
    CHECK_THROWS_AS(check_elementary_inequality(0.0, 0.5), HypothesisError);
    CHECK_THROWS_AS(check_elementary_inequality(1.0, 1.5), HypothesisError);
}

TEST_CASE("I1 and I2 of the second lemma")
{
    CHECK(check_I1_lemma2(0.0, 0.0, 3.0, 3.0, 1e-10).value == 0.0);
    CHECK(check_I2_lemma2(0.0, 0.0, 3.0, 3.0, 1e-10).value == 0.0);
    const auto i2 = check_I2_lemma2(10.0, 10.0, 3.0, 3.0, 1e-12);
    CHECK(i2.pass);
    CHECK(i2.value == doctest::Approx(0.00571564443681273635).epsilon(1e-10));
    CHECK(i2.bound == doctest::Approx(5.0 / 121.0));
    const auto i1 = check_I1_lemma2(100.0, 0.0, 3.0, 3.0, 1e-12);
    CHECK(i1.pass);
    CHECK(i1.value == doctest::Approx(4.81277827179987880e-5).epsilon(1e-9));
    CHECK(i1.bound == doctest::Approx(0.5 / (101.0 * 101.0)));
    CHECK(check_I2_lemma2(100.0, 0.0, 3.0, 3.0, 1e-12).value == 0.0);
}

TEST_CASE("min identity holds on random points")
{
    testing::Gen g(41);
    for (int k = 0; k < 10000; ++k) {
        const auto [u, v] = g.null_pair(1e4);
        CHECK(check_min_identity(u, v).pass);
    }
}

TEST_CASE("null-derivative bounds")
{
    const auto first = check_du_psi_lemma1(1.0, 1.0, 3.0, 3.0, 1e-12);
    CHECK(first.pass);
    CHECK(first.bound == doctest::Approx(lemma1_constants(3.0, 3.0).B / 4.0));
    REQUIRE(first.alternate_bound.has_value());
    CHECK_THROWS_AS(check_du_psi_lemma1(1.0, 1.0, 3.0, 2.0, 1e-12), HypothesisError);
    CHECK(check_du_psi_lemma2(4.0, 1.0, 1.0, 3.0, 3.0, 1e-12).pass);
}

TEST_CASE("the second null-derivative constant is exceeded near the axis")
{
    // steep p with lambda - 1 > q: the <r> weight of the true source is
    // weaker than the <u - v'> weight the constant was derived from
    const auto worst = check_du_psi_lemma2(4.583467760857199, 3.9898530357867, 5.505991873959856,
                                           3.609780831761987, 5.22025146652428, 1e-12);
    CHECK_FALSE(worst.pass);
    CHECK(worst.value == doctest::Approx(7.927651671329674e-08).epsilon(1e-8));
    CHECK(worst.bound == doctest::Approx(5.6633175104544904e-08).epsilon(1e-12));
}

TEST_CASE("closure conditions")
{
    const auto p3 = closure_nonlinear(3.0);
    CHECK(p3.accepted);
    CHECK(p3.value == 1.0);
    CHECK_FALSE(closure_nonlinear(2.4).accepted);
    CHECK(closure_nonlinear(2.4).reason == "requires p > 1+sqrt(2)");
    CHECK_FALSE(closure_nonlinear(1.0 + std::sqrt(2.0)).accepted);
    CHECK_FALSE(closure_nonlinear(NAN).accepted);

    const auto l3 = closure_potential(3.0);
    CHECK(l3.accepted);
    CHECK(l3.value == 3.0);
    CHECK_FALSE(closure_potential(2.0).accepted);
    CHECK(closure_potential(2.0).reason == "requires lambda > 2");
    const auto l25 = closure_potential(2.5);
    CHECK(l25.accepted);
    CHECK(l25.value - 1.0 > 1.0);
}

TEST_CASE("every admitted semilinear exponent closes")
{
    testing::Gen g(42);
    for (int k = 0; k < 2000; ++k) {
        const double p = g.uniform(1.0, 8.0);
        const auto c = closure_nonlinear(p);
        CHECK(c.accepted == (p > 1.0 + std::sqrt(2.0)));
        if (c.accepted) {
            CHECK(p > 2.0);
            CHECK(p * c.value > 1.0);
        }
    }
}

TEST_CASE("B decreases in p and q")
{
    for (double p = 2.1; p < 8.0; p += 0.3)
        for (double q = 1.1; q < 6.0; q += 0.3) {
            CHECK(lemma1_constants(p + 0.1, q).B < lemma1_constants(p, q).B);
            CHECK(lemma1_constants(p, q + 0.1).B < lemma1_constants(p, q).B);
        }
}

TEST_CASE("second lemma reduces to the first when q >= lambda - 1")
{
    testing::Gen g(43);
    for (int k = 0; k < 2000; ++k) {
        const double lambda = g.uniform(2.01, 8.0);
        const double q = g.uniform(lambda - 1.0, lambda + 4.0);
        const double p = g.uniform(0.01, 6.0);
        CHECK(lemma2_constants(p, q, lambda).nu == doctest::Approx(lemma1_constants(p + lambda, q).nu));
    }
}

TEST_CASE("verify_decay on the first lemma field")
{
    const auto field = solve(source_lemma1(DecayProfile(1.0, 3.0, 2.0)), CharGrid::make(GridSpec{}));
    const double C = lemma1_constants(3.0, 2.0).C;
    const auto report = verify_decay(field, WeightExponents{1.0, 1.0}, C);
    CHECK(report.pass);
    CHECK(report.measured_sup == doctest::Approx(0.49969545703685203).epsilon(1e-9));
    CHECK(report.margin() > 0.12);
    CHECK(report.sample_count == 735u * 735u + 1000u);
    CHECK_THROWS_AS(verify_decay(field, WeightExponents{1.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("verify_decay on a zero field")
{
    const auto field = solve(custom_source([](double, double) { return 0.0; }), CharGrid::uniform(4.0, 4));
    const auto report = verify_decay(field, WeightExponents{1.0, 2.0}, 1.0);
    CHECK(report.pass);
    CHECK(report.measured_sup == 0.0);
}

TEST_CASE("the second decay constant is exceeded by the exact solution")
{
    // weighted axis value <t>^3 phi(t, 0) tends to 2 > 1.375
    const auto field = solve(source_lemma2(DecayProfile(1.0, 1.0, 3.0, 3.0)), CharGrid::make(GridSpec{}));
    const auto report = verify_decay(field, WeightExponents{1.0, 2.0}, lemma2_constants(1.0, 3.0, 3.0).C);
    CHECK_FALSE(report.pass);
    CHECK(report.measured_sup == doctest::Approx(1.9926084953339442).epsilon(1e-9));
    CHECK(report.t_argmax == doctest::Approx(1000.0));
    CHECK(report.r_argmax == 0.0);
    CHECK(std::abs(axis_decay_slope(field, 10.0, 1000.0) + 3.0) <= 0.15);
}

TEST_CASE("inequality suite")
{
    const auto summary = run_inequality_suite(1000, kDefaultSeed);
    CHECK(summary.pass());
    CHECK(summary.tuples == 1000);
    CHECK(summary.runs.at("I1_lemma1") == 1000);
    CHECK(summary.runs.at("I2_lemma1") == summary.runs.at("du_psi_lemma1"));
    CHECK(summary.runs.size() == 7);
    CHECK(summary.diagnostic_runs.at("du_psi_lemma2") == 1000);
    CHECK(summary.diagnostic_violations.at("du_psi_lemma2") == 37);

    const auto again = run_inequality_suite(1000, kDefaultSeed);
    CHECK(again.total_runs() == summary.total_runs());
    const auto tuples = random_tuples(500, 7);
    for (const auto& t : tuples) {
        CHECK(std::abs(t.v) <= t.u);
        CHECK(t.p1 > 2.0);
        CHECK(t.q > 1.0);
        CHECK(t.lambda > 2.0);
    }
}
