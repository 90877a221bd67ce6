#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wavedecay/core_types.hpp"
#include "wavedecay/radial_solver.hpp"

namespace wavedecay {

/// Default quasi-random seed (number of leading Sobol points skipped).
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SamplingOptions {
    std::size_t off_grid_samples = 1000;
    std::uint64_t seed = kDefaultSeed;
};

/// Quasi-random (t, r) points covering u in [0, u_max] log-uniformly in <u>
/// and v uniformly in [-u, u].
std::vector<SpacetimePoint> quasi_random_points(double u_max, std::size_t count, std::uint64_t seed);

/// Quasi-random points in [0, 1)^dim, row-major (count x dim).
std::vector<double> sobol_points(unsigned dim, std::size_t count, std::uint64_t seed);

struct SupResult {
    double sup = 0.0;
    double t_argmax = 0.0;
    double r_argmax = 0.0;
    std::size_t samples = 0;
};

/// Grid sup of weighted_amplitude(phi) over every node plus interpolated
/// off-grid samples.
SupResult weighted_sup(const RadialField& field, const WeightExponents& w,
                       const SamplingOptions& options = {});

/// Same sup for phi_a - phi_b; both fields must share a grid.
SupResult weighted_sup_difference(const RadialField& a, const RadialField& b, const WeightExponents& w,
                                  const SamplingOptions& options = {});

} // namespace wavedecay
