#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "wavedecay/quadrature.hpp"
#include "wavedecay/radial_solver.hpp"
#include "wavedecay/sampling.hpp"

namespace wavedecay {

/// Source F(t, x) in three dimensions paired with a radial majorant G(t, |x|).
/// majorant_valid is only set by verify_majorant.
struct VolumetricSource {
    std::function<double(double, const Eigen::Vector3d&)> evaluator;
    RadialSource radial_majorant;
    bool majorant_valid = false;

    double operator()(double t, const Eigen::Vector3d& x) const { return evaluator(t, x); }
};

/// Source that is exactly its own radial profile, F(t, x) = G(t, |x|).
VolumetricSource radial_volumetric(const RadialSource& g);

struct RetardedOptions {
    QuadOptions radial{1e-13, 1e-8, 2'000'000};
    QuadOptions polar{1e-15, 1e-10, 200'000};
    int azimuth_points = 48;
};

/// Retarded potential (1/4pi) int_{|y-x|<=t} F(t-|y-x|, y) / |y-x| dy, written
/// as int_0^t rho * (mean of F(t-rho, .) over the sphere |y-x| = rho) drho.
/// The sphere mean is taken in polar coordinates about the direction of x:
/// adaptive in cos(theta) with a break where the shell crosses the light cone
/// t - rho = |y|, and a periodic trapezoid rule in azimuth.
double retarded_integral(const VolumetricSource& F, double t, const Eigen::Vector3d& x,
                         const RetardedOptions& options = {});

struct SpaceTimeSample {
    double t = 0.0;
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
};

struct MajorantCheck {
    bool pass = false;
    std::size_t samples = 0;
    double worst_ratio = 0.0;  // max |F| / G over samples
    std::optional<SpaceTimeSample> witness;
};

/// Checks |F(t, x)| <= G(t, |x|) on quasi-random points of [0, t_max] x B(r_max)
/// and records the outcome in F.majorant_valid.
MajorantCheck verify_majorant(VolumetricSource& F, std::size_t sample_count, double t_max = 20.0,
                              double r_max = 10.0, std::uint64_t seed = kDefaultSeed);

/// Quasi-random sample points with t in [0, t_max] and |x| <= r_max.
std::vector<SpaceTimeSample> quasi_random_spacetime(std::size_t count, double t_max, double r_max,
                                                    std::uint64_t seed = kDefaultSeed);

struct ComparisonPoint {
    SpaceTimeSample point;
    double phi1 = 0.0;  // retarded integral of F
    double phi2 = 0.0;  // radial solution of the majorant at |x|
    double margin = 0.0;  // phi2 - |phi1|
};

struct ComparisonReport {
    std::vector<ComparisonPoint> points;
    std::vector<std::size_t> violations;  // indices into points
    double tol = 0.0;

    bool pass() const { return violations.empty(); }
};

/// |phi1| <= phi2 + tol at every point. Requires a verified majorant.
ComparisonReport compare(const VolumetricSource& F, const std::vector<SpaceTimeSample>& points, double tol,
                         const RetardedOptions& options = {});

} // namespace wavedecay
