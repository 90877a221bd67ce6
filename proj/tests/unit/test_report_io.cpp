#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "generators.hpp"
#include "wavedecay/report_io.hpp"

using namespace wavedecay;

TEST_CASE("format_double round-trips")
{
    CHECK(format_double(0.625) == "0.625");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()).empty());
    testing::Gen g(51);
    for (int k = 0; k < 5000; ++k) {
        const double x = g.uniform(-1.0, 1.0) * std::pow(10.0, g.uniform(-300.0, 300.0));
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("trace csv leaves undefined entries empty")
{
    IterationTrace trace;
    trace.steps.push_back({0, 0.5, NAN, NAN, NAN, true});
    trace.steps.push_back({1, 0.25, 0.75, NAN, 0.3, true});
    trace.steps.push_back({2, 0.125, 0.5, 2.0 / 3.0, 0.2, true});
    std::ostringstream os;
    write_trace_csv(trace, os);
    CHECK(os.str() == "step,C_n,diff_norm,ratio\n0,0.5,,\n1,0.25,0.75,\n2,0.125,0.5,0.6666666666666666\n");
}

TEST_CASE("check results serialize their alternate bound")
{
    const CheckResult with{"I2_lemma1", true, 0.1, 0.5, 0.25};
    const auto j = to_json(with);
    CHECK(j["alternate_bound"].get<double>() == 0.25);
    CHECK(j["margin"].get<double>() == doctest::Approx(0.4));
    CHECK_FALSE(to_json(CheckResult{"x", true, 0.0, 1.0, std::nullopt}).contains("alternate_bound"));
}
