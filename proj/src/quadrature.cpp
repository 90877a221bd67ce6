#include "wavedecay/quadrature.hpp"

#include <sstream>

namespace wavedecay::detail {

void check_finite_sample(double fx, double x)
{
    if (!std::isfinite(fx)) {
        std::ostringstream os;
        os << "integrand is not finite at x = " << x;
        throw QuadratureError(os.str(), {});
    }
}

std::vector<double> breakpoints(double a, double b, const std::vector<double>& kinks)
{
    std::vector<double> points{a};
    std::vector<double> interior;
    for (double k : kinks)
        if (k > a && k < b)
            interior.push_back(k);
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
    points.insert(points.end(), interior.begin(), interior.end());
    points.push_back(b);
    return points;
}

} // namespace wavedecay::detail
