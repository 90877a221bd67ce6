#include "wavedecay/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/random/sobol.hpp>

namespace wavedecay {

std::vector<double> sobol_points(unsigned dim, std::size_t count, std::uint64_t seed)
{
    boost::random::sobol engine(dim);
    engine.discard(static_cast<boost::uintmax_t>(seed) * dim);
    const double scale = std::ldexp(1.0, -std::numeric_limits<boost::random::sobol::result_type>::digits);
    std::vector<double> out(count * dim);
    for (auto& x : out)
        x = static_cast<double>(engine()) * scale;
    return out;
}

std::vector<SpacetimePoint> quasi_random_points(double u_max, std::size_t count, std::uint64_t seed)
{
    const auto unit = sobol_points(2, count, seed);
    std::vector<SpacetimePoint> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = std::pow(1.0 + u_max, unit[2 * k]) - 1.0;
        const double v = u * (2.0 * unit[2 * k + 1] - 1.0);
        out.emplace_back(std::max(0.0, 0.5 * (u + v)), std::max(0.0, 0.5 * (u - v)));
    }
    return out;
}

namespace {

template <typename ValueAt, typename NodeValue>
SupResult sup_over(const RadialField& field, const WeightExponents& w, const SamplingOptions& options,
                   NodeValue&& node_value, ValueAt&& value_at)
{
    SupResult result;
    auto consider = [&](double value, double t, double r) {
        ++result.samples;
        const double weighted = weighted_amplitude(value, t, r, w);
        if (!std::isfinite(weighted))
            throw std::domain_error("non-finite weighted amplitude in field");
        if (weighted > result.sup || result.samples == 1) {
            result.sup = weighted;
            result.t_argmax = t;
            result.r_argmax = r;
        }
    };
    field.for_each_node([&](Eigen::Index i, Eigen::Index j, double t, double r, double, double) {
        consider(node_value(i, j), t, r);
    });
    for (const auto& pt : quasi_random_points(field.grid().u_max(), options.off_grid_samples, options.seed))
        consider(value_at(pt.t(), pt.r()), pt.t(), pt.r());
    return result;
}

} // namespace

SupResult weighted_sup(const RadialField& field, const WeightExponents& w, const SamplingOptions& options)
{
    return sup_over(
        field, w, options, [&](Eigen::Index i, Eigen::Index j) { return field.phi()(i, j); },
        [&](double t, double r) { return field.phi_at(t, r); });
}

SupResult weighted_sup_difference(const RadialField& a, const RadialField& b, const WeightExponents& w,
                                  const SamplingOptions& options)
{
    if (a.grid().u_nodes() != b.grid().u_nodes())
        throw std::invalid_argument("difference norm requires fields on the same grid");
    return sup_over(
        a, w, options, [&](Eigen::Index i, Eigen::Index j) { return a.phi()(i, j) - b.phi()(i, j); },
        [&](double t, double r) { return a.phi_at(t, r) - b.phi_at(t, r); });
}

} // namespace wavedecay
