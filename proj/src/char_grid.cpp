#include "wavedecay/char_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavedecay {
namespace {

std::vector<double> mirrored(const std::vector<double>& u)
{
    std::vector<double> v;
    v.reserve(2 * u.size() - 1);
    for (auto it = u.rbegin(); it != u.rend(); ++it)
        if (*it != 0.0)
            v.push_back(-*it);
    v.insert(v.end(), u.begin(), u.end());
    return v;
}

void validate_u(const std::vector<double>& u)
{
    if (u.size() < 2)
        throw std::invalid_argument("characteristic grid needs at least two u-nodes");
    if (u.front() != 0.0)
        throw std::invalid_argument("characteristic grid must start at u = 0");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i]))
            throw std::invalid_argument("characteristic grid nodes must be finite");
        if (i > 0 && !(u[i] > u[i - 1]))
            throw std::invalid_argument("characteristic grid u-nodes must be strictly increasing");
    }
}

} // namespace

GridSpec GridSpec::refined() const
{
    GridSpec out = *this;
    out.nodes_per_unit = 2 * nodes_per_unit;
    out.ratio = std::sqrt(ratio);
    return out;
}

CharGrid::CharGrid(std::vector<double> u_nodes) : u_(std::move(u_nodes))
{
    validate_u(u_);
    v_ = mirrored(u_);
}

CharGrid::CharGrid(std::vector<double> u_nodes, std::vector<double> v_nodes)
    : u_(std::move(u_nodes)), v_(std::move(v_nodes))
{
    validate_u(u_);
    const auto expected = mirrored(u_);
    if (v_.size() != expected.size())
        throw std::invalid_argument("v-nodes must mirror the u-nodes (size mismatch)");
    for (std::size_t j = 0; j < v_.size(); ++j) {
        if (v_[j] != expected[j]) {
            const double vj = v_[j];
            if (std::abs(vj) > u_.back())
                throw std::invalid_argument("grid node violates |v| <= u (v = " + std::to_string(vj) +
                                            ")");
            throw std::invalid_argument("v-nodes must mirror the u-nodes (v = " +
                                        std::to_string(vj) + ")");
        }
    }
}

CharGrid CharGrid::make(const GridSpec& spec)
{
    if (!(spec.u_max > 0.0) || spec.nodes_per_unit < 1 || !(spec.ratio > 1.0) ||
        spec.uniform_limit < 0.0)
        throw std::invalid_argument("invalid grid spec");

    std::vector<double> u;
    const double h = 1.0 / spec.nodes_per_unit;
    const double uniform_end = std::min(spec.uniform_limit, spec.u_max);
    const auto uniform_cells = static_cast<long>(std::llround(std::ceil(uniform_end / h - 1e-9)));
    for (long k = 0; k < uniform_cells; ++k)
        u.push_back(static_cast<double>(k) * h);
    u.push_back(uniform_end);

    if (spec.u_max > uniform_end) {
        double next = uniform_end * spec.ratio;
        if (uniform_end == 0.0)
            next = h;
        while (next < spec.u_max) {
            u.push_back(next);
            next *= spec.ratio;
        }
        // avoid a sliver cell at the outer edge
        const double last_step = u.back() * (spec.ratio - 1.0);
        if (spec.u_max - u.back() < 0.5 * last_step && u.size() > 2 && u.back() > uniform_end)
            u.pop_back();
        u.push_back(spec.u_max);
    }
    return CharGrid(std::move(u));
}

CharGrid CharGrid::uniform(double u_max, int nodes_per_unit)
{
    GridSpec spec;
    spec.u_max = u_max;
    spec.nodes_per_unit = nodes_per_unit;
    spec.uniform_limit = u_max;
    return make(spec);
}

std::size_t CharGrid::node_count() const noexcept
{
    const std::size_t n = u_.size() - 1;
    return (n + 1) * (n + 1);
}

Eigen::Index CharGrid::locate_u(double u) const
{
    if (!(u >= 0.0) || u > u_.back())
        throw std::out_of_range("u outside the characteristic grid");
    auto it = std::upper_bound(u_.begin(), u_.end(), u);
    auto idx = static_cast<Eigen::Index>(it - u_.begin()) - 1;
    return std::min(idx, u_count() - 2);
}

Eigen::Index CharGrid::locate_v(double v) const
{
    if (!(std::abs(v) <= u_.back()))
        throw std::out_of_range("v outside the characteristic grid");
    auto it = std::upper_bound(v_.begin(), v_.end(), v);
    auto idx = static_cast<Eigen::Index>(it - v_.begin()) - 1;
    return std::clamp<Eigen::Index>(idx, 0, v_count() - 2);
}

} // namespace wavedecay
