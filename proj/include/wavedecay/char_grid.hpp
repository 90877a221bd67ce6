#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace wavedecay {

/// Node layout of a characteristic grid: uniform spacing below
/// uniform_limit, geometric with the given ratio above it, up to u_max.
struct GridSpec {
    double u_max = 1000.0;
    int nodes_per_unit = 64;
    double uniform_limit = 10.0;
    double ratio = 1.05;

    /// Halves the spacing in both regimes.
    GridSpec refined() const;
};

/// Characteristic mesh on u >= 0, |v| <= u. The v-nodes are the u-nodes
/// mirrored through zero, so v = 0 and every +-u_i are mesh lines, and the
/// stored node (i, j) is inside the domain iff |j - N| <= i with N the index of
/// the last u-node.
class CharGrid {
public:
    explicit CharGrid(std::vector<double> u_nodes);

    /// Accepts an explicit v-node list; it must be the mirrored u-node set.
    CharGrid(std::vector<double> u_nodes, std::vector<double> v_nodes);

    static CharGrid make(const GridSpec& spec);
    static CharGrid uniform(double u_max, int nodes_per_unit);

    const std::vector<double>& u_nodes() const noexcept { return u_; }
    const std::vector<double>& v_nodes() const noexcept { return v_; }
    Eigen::Index u_count() const noexcept { return static_cast<Eigen::Index>(u_.size()); }
    Eigen::Index v_count() const noexcept { return static_cast<Eigen::Index>(v_.size()); }
    Eigen::Index center() const noexcept { return u_count() - 1; }
    double u_max() const noexcept { return u_.back(); }

    double u(Eigen::Index i) const { return u_[static_cast<std::size_t>(i)]; }
    double v(Eigen::Index j) const { return v_[static_cast<std::size_t>(j)]; }

    bool contains(Eigen::Index i, Eigen::Index j) const noexcept
    {
        const Eigen::Index offset = j - center();
        return (offset < 0 ? -offset : offset) <= i;
    }

    /// v-index of +u_i (sign > 0) or -u_i (sign < 0).
    Eigen::Index v_index(Eigen::Index i, int sign) const noexcept
    {
        return sign >= 0 ? center() + i : center() - i;
    }

    std::size_t node_count() const noexcept;

    /// Cell containing u (clamped to the last cell at u_max).
    Eigen::Index locate_u(double u) const;
    Eigen::Index locate_v(double v) const;

private:
    std::vector<double> u_;
    std::vector<double> v_;
};

} // namespace wavedecay
