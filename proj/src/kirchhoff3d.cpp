#include "wavedecay/kirchhoff3d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Geometry>

namespace wavedecay {

VolumetricSource radial_volumetric(const RadialSource& g)
{
    return {[g](double t, const Eigen::Vector3d& x) { return g(t, x.norm()); }, g, false};
}

namespace {

struct ShellFrame {
    Eigen::Vector3d axis;
    Eigen::Vector3d e1;
    Eigen::Vector3d e2;
};

ShellFrame frame_about(const Eigen::Vector3d& x)
{
    ShellFrame f;
    const double n = x.norm();
    f.axis = n > 0.0 ? Eigen::Vector3d(x / n) : Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d helper =
        std::abs(f.axis.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    f.e1 = f.axis.cross(helper).normalized();
    f.e2 = f.axis.cross(f.e1);
    return f;
}

} // namespace

double retarded_integral(const VolumetricSource& F, double t, const Eigen::Vector3d& x,
                         const RetardedOptions& options)
{
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("retarded integral requires t >= 0");
    if (options.azimuth_points < 1)
        throw std::invalid_argument("azimuth rule needs at least one point");
    if (t == 0.0)
        return 0.0;

    const double xn = x.norm();
    const ShellFrame frame = frame_about(x);
    const int m = options.azimuth_points;
    Eigen::Matrix3Xd ring(3, m);
    for (int k = 0; k < m; ++k) {
        const double alpha = 2.0 * std::numbers::pi * k / m;
        ring.col(k) = std::cos(alpha) * frame.e1 + std::sin(alpha) * frame.e2;
    }

    auto sphere_mean = [&](double rho) {
        const double retarded_t = t - rho;
        if (rho == 0.0)
            return F(t, x);
        auto over_ring = [&](double mu) {
            const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            const Eigen::Vector3d base = x + rho * mu * frame.axis;
            double acc = 0.0;
            for (int k = 0; k < m; ++k)
                acc += F(retarded_t, base + (rho * s) * ring.col(k));
            return acc / m;
        };
        std::vector<double> kinks;
        if (xn > 0.0) {
            const double mu_cone = (retarded_t * retarded_t - xn * xn - rho * rho) / (2.0 * rho * xn);
            if (mu_cone > -1.0 && mu_cone < 1.0)
                kinks.push_back(mu_cone);
        }
        return 0.5 * integrate_1d(over_ring, -1.0, 1.0, options.polar, kinks).value;
    };

    auto shell = [&](double rho) { return rho * sphere_mean(rho); };
    const std::vector<double> kinks{0.5 * (t - xn), 0.5 * (t + xn), xn};
    return integrate_1d(shell, 0.0, t, options.radial, kinks).value;
}

std::vector<SpaceTimeSample> quasi_random_spacetime(std::size_t count, double t_max, double r_max,
                                                    std::uint64_t seed)
{
    const auto unit = sobol_points(4, count, seed);
    std::vector<SpaceTimeSample> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double* s = &unit[4 * k];
        const double radius = r_max * std::cbrt(s[1]);
        const double z = 2.0 * s[2] - 1.0;
        const double ring = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double az = 2.0 * std::numbers::pi * s[3];
        out[k].t = t_max * s[0];
        out[k].x = radius * Eigen::Vector3d(ring * std::cos(az), ring * std::sin(az), z);
    }
    return out;
}

MajorantCheck verify_majorant(VolumetricSource& F, std::size_t sample_count, double t_max, double r_max,
                              std::uint64_t seed)
{
    if (!F.radial_majorant.evaluator)
        throw std::invalid_argument("volumetric source has no radial majorant");
    MajorantCheck check;
    check.pass = true;
    for (const auto& sample : quasi_random_spacetime(sample_count, t_max, r_max, seed)) {
        ++check.samples;
        const double f = std::abs(F(sample.t, sample.x));
        const double g = F.radial_majorant(sample.t, sample.x.norm());
        const double ratio = g > 0.0 ? f / g : (f > 0.0 ? INFINITY : 0.0);
        if (ratio > check.worst_ratio)
            check.worst_ratio = ratio;
        if (!(f <= g * (1.0 + 1e-12))) {
            if (check.pass || ratio >= check.worst_ratio)
                check.witness = sample;
            check.pass = false;
        }
    }
    F.majorant_valid = check.pass;
    return check;
}

ComparisonReport compare(const VolumetricSource& F, const std::vector<SpaceTimeSample>& points, double tol,
                         const RetardedOptions& options)
{
    if (!F.majorant_valid)
        throw std::logic_error("comparison requires a verified majorant (run verify_majorant first)");
    if (!(tol >= 0.0))
        throw std::invalid_argument("comparison tolerance must be nonnegative");
    ComparisonReport report;
    report.tol = tol;
    report.points.resize(points.size());
    parallel_for(0, static_cast<std::ptrdiff_t>(points.size()), [&](std::ptrdiff_t k) {
        auto& entry = report.points[static_cast<std::size_t>(k)];
        entry.point = points[static_cast<std::size_t>(k)];
        entry.phi1 = retarded_integral(F, entry.point.t, entry.point.x, options);
        entry.phi2 = point_phi(F.radial_majorant, SpacetimePoint{entry.point.t, entry.point.x.norm()});
        entry.margin = entry.phi2 - std::abs(entry.phi1);
    });
    for (std::size_t k = 0; k < report.points.size(); ++k)
        if (report.points[k].margin < -tol)
            report.violations.push_back(k);
    return report;
}

} // namespace wavedecay
