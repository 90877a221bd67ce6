#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "wavedecay/char_grid.hpp"
#include "wavedecay/quadrature.hpp"

using namespace wavedecay;

namespace {

// H = exp(v - u) has psi in closed form.
double exp_psi(double u, double v)
{
    const double av = std::abs(v);
    return 0.25 * (std::exp(v) * (std::exp(-av) - std::exp(-u)) - 0.5 * (std::exp(-2.0 * av) - std::exp(-2.0 * u)));
}

double max_exp_error(int per_unit)
{
    const auto grid = CharGrid::uniform(4.0, per_unit);
    const auto psi = cumulative_triangle([](double u, double v) { return std::exp(v - u); }, grid);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < grid.u_count(); ++i)
        for (Eigen::Index j = 0; j < grid.v_count(); ++j)
            if (grid.contains(i, j))
                worst = std::max(worst, std::abs(psi(i, j) - exp_psi(grid.u(i), grid.v(j))));
    return worst;
}

} // namespace

TEST_CASE("integrate_1d examples")
{
    auto sq = [](double x) { return x * x; };
    CHECK(integrate_1d(sq, 0.0, 1.0, 1e-12).value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    const auto degenerate = integrate_1d(sq, 2.0, 2.0, 1e-12);
    CHECK(degenerate.value == 0.0);
    CHECK(degenerate.evaluations == 0);

    auto kinked = [](double x) { return std::abs(x - 0.3); };
    const auto with_kink = integrate_1d(kinked, 0.0, 1.0, 1e-12, {0.3});
    CHECK(with_kink.value == doctest::Approx(0.29).epsilon(1e-13));
    CHECK(with_kink.error_estimate <= 1e-12);
    CHECK(with_kink.evaluations == 30);

    QuadOptions tail;
    tail.abs_tol = 1e-13;
    CHECK(integrate_to_infinity([](double x) { return std::pow(1.0 + x, -3.0); }, 0.0, tail).value ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("integrate_1d rejects bad input")
{
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_1d(one, 1.0, 0.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d(one, 0.0, INFINITY, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d(one, 0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d([](double x) { return x > 0.5 ? NAN : 1.0; }, 0.0, 1.0, 1e-10), QuadratureError);
}

TEST_CASE("evaluation budget produces a QuadratureError with the best estimate")
{
    QuadOptions opts;
    opts.abs_tol = 1e-14;
    opts.max_evaluations = 200;
    auto wild = [](double x) { return std::sin(1.0 / x); };
    try {
        (void)integrate_1d(wild, 1e-4, 1.0, opts);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.best().evaluations <= 200);
        CHECK(e.best().evaluations > 0);
        CHECK(std::isfinite(e.best().value));
        CHECK(e.best().error_estimate > 1e-14);
    }
}

TEST_CASE("fake kinks do not change smooth integrals")
{
    testing::Gen g(21);
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
    const double exact = (1.0 - std::exp(-2.0) * (std::cos(6.0) - 3.0 * std::sin(6.0))) / 10.0;
    for (int k = 0; k < 200; ++k) {
        std::vector<double> kinks{g.uniform(-1.0, 3.0), g.uniform(0.0, 2.0), g.uniform(0.0, 2.0)};
        CHECK(integrate_1d(f, 0.0, 2.0, 1e-12, kinks).value == doctest::Approx(exact).epsilon(1e-11));
    }
}

TEST_CASE("grid layout")
{
    const auto grid = CharGrid::make(GridSpec{});
    CHECK(grid.u_count() == 735);
    CHECK(grid.v_count() == 1469);
    CHECK(grid.u_max() == doctest::Approx(1000.0));
    CHECK(grid.v(grid.center()) == 0.0);
    CHECK(grid.node_count() == 735u * 735u);
    CHECK(grid.contains(0, grid.center()));
    CHECK_FALSE(grid.contains(0, grid.center() + 1));
    CHECK(grid.v(grid.v_index(5, -1)) == -grid.u(5));

    const auto spec = GridSpec{}.refined();
    CHECK(spec.nodes_per_unit == 128);
    CHECK(spec.ratio == doctest::Approx(std::sqrt(1.05)));

    CHECK_THROWS_AS(CharGrid({0.0, 1.0, 2.0}, {-2.0, -1.0, 0.5, 1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(CharGrid({0.0, 2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("cumulative_triangle examples")
{
    const auto grid = CharGrid::uniform(4.0, 8);
    const auto zero = cumulative_triangle([](double, double) { return 0.0; }, grid);
    for (Eigen::Index i = 0; i < grid.u_count(); ++i)
        for (Eigen::Index j = 0; j < grid.v_count(); ++j) {
            if (grid.contains(i, j))
                CHECK(zero(i, j) == 0.0);
            else
                CHECK(std::isnan(zero(i, j)));
        }

    // G = 1 gives psi = r t^2 / 2
    const auto constant = cumulative_triangle([](double u, double v) { return 0.5 * (u - v); }, grid);
    const Eigen::Index i = 16;  // u = 2
    const Eigen::Index j = grid.center() + 8;  // v = 1
    REQUIRE(grid.u(i) == 2.0);
    REQUIRE(grid.v(j) == 1.0);
    CHECK(constant(i, j) == doctest::Approx(0.5625).epsilon(1e-13));
}

TEST_CASE("cumulative_triangle is linear in H")
{
    const auto grid = CharGrid::uniform(6.0, 4);
    auto h1 = [](double u, double v) { return std::cos(u) * (u - v); };
    auto h2 = [](double u, double v) { return std::exp(-u) * v * v; };
    const auto a = cumulative_triangle(h1, grid);
    const auto b = cumulative_triangle(h2, grid);
    const auto c = cumulative_triangle([&](double u, double v) { return 2.5 * h1(u, v) - 0.75 * h2(u, v); }, grid);
    for (Eigen::Index i = 0; i < grid.u_count(); ++i)
        for (Eigen::Index j = 0; j < grid.v_count(); ++j)
            if (grid.contains(i, j))
                CHECK(c(i, j) == doctest::Approx(2.5 * a(i, j) - 0.75 * b(i, j)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("cumulative_triangle converges at sixth order")
{
    const double coarse = max_exp_error(2);
    const double fine = max_exp_error(4);
    MESSAGE("max error " << coarse << " -> " << fine);
    CHECK(fine < 1e-8);
    CHECK(coarse / fine > 40.0);
}
