#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace wavedecay::testing {

// Deterministic draws for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    // log-uniform in <x> over [0, hi]
    double log_uniform(double hi) { return std::pow(1.0 + hi, uniform(0.0, 1.0)) - 1.0; }

    // (u, v) with |v| <= u
    std::pair<double, double> null_pair(double u_max)
    {
        const double u = log_uniform(u_max);
        return {u, u * uniform(-1.0, 1.0)};
    }

private:
    std::mt19937_64 rng_;
};

} // namespace wavedecay::testing
