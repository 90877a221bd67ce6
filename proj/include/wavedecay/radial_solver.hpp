#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "wavedecay/char_grid.hpp"
#include "wavedecay/core_types.hpp"
#include "wavedecay/quadrature.hpp"

namespace wavedecay {

/// Spherically symmetric source G(t, r). descriptor is empty for custom sources.
struct RadialSource {
    std::function<double(double, double)> evaluator;
    std::optional<DecayProfile> descriptor;

    double operator()(double t, double r) const { return evaluator(t, r); }
};

/// A / (<t+r>^p <t-r>^q).
RadialSource source_lemma1(const DecayProfile& profile);
/// A / (<r>^lambda <t+r>^p <t-r>^q).
RadialSource source_lemma2(const DecayProfile& profile);
RadialSource custom_source(std::function<double(double, double)> evaluator);

/// H(u, v) = r G(t, r) written in null coordinates.
inline double h_of_uv(const RadialSource& src, double u, double v)
{
    const double r = 0.5 * (u - v);
    if (r == 0.0)
        return 0.0;
    return r * src(0.5 * (u + v), r);
}

double h_of_uv(const RadialSource& src, const NullPoint& np);

/// Default tolerances for pointwise derivative and axis evaluations.
QuadOptions pointwise_options();

/// d psi / du = (1/4) int_{-u}^{v} H(u, v') dv'.
double du_psi(const RadialSource& src, const NullPoint& np, const QuadOptions& options = pointwise_options());

/// d psi / dv = (1/4) int_{|v|}^{u} H(u', v) du' - sign(v) (1/4) int_{-|v|}^{v} H(|v|, v') dv'.
/// The second term comes from the moving lower limit and vanishes for v <= 0.
double dv_psi(const RadialSource& src, const NullPoint& np, const QuadOptions& options = pointwise_options());

/// phi(t, 0) as the axis limit (du_psi - dv_psi)(t, t).
double phi_on_axis(const RadialSource& src, double t, const QuadOptions& options = pointwise_options());

/// phi(t, r) by nested adaptive quadrature of the double integral, without a grid.
double point_phi(const RadialSource& src, const SpacetimePoint& pt,
                 const QuadOptions& options = pointwise_options());

/// psi and phi sampled on a characteristic grid. Tables are indexed (u-index,
/// v-index); entries outside |v| <= u are NaN.
class RadialField {
public:
    RadialField(CharGrid grid, Eigen::MatrixXd psi, Eigen::MatrixXd phi);

    const CharGrid& grid() const noexcept { return grid_; }
    const Eigen::MatrixXd& psi() const noexcept { return psi_; }
    const Eigen::MatrixXd& phi() const noexcept { return phi_; }

    /// phi at an arbitrary (t, r) inside the grid: bilinear in (u, v) on
    /// interior cells, linear on the triangular cells cut by u = |v|.
    double phi_at(double t, double r) const;

    /// Visits every in-domain node as fn(i, j, t, r, psi, phi).
    template <typename Fn>
    void for_each_node(Fn&& fn) const
    {
        const Eigen::Index c = grid_.center();
        for (Eigen::Index j = 0; j < grid_.v_count(); ++j) {
            const Eigen::Index start = j < c ? c - j : j - c;
            for (Eigen::Index i = start; i < grid_.u_count(); ++i) {
                const double u = grid_.u(i);
                const double v = grid_.v(j);
                fn(i, j, 0.5 * (u + v), 0.5 * (u - v), psi_(i, j), phi_(i, j));
            }
        }
    }

private:
    CharGrid grid_;
    Eigen::MatrixXd psi_;
    Eigen::MatrixXd phi_;
};

struct SolveOptions {
    QuadOptions axis = pointwise_options();
    // Splits every axis integral at the v-grid lines. For sources that are
    // only piecewise smooth on the grid, such as interpolated fields.
    bool axis_split_at_grid = false;
};

/// Solves the radial wave equation with null data: psi from the cumulative
/// double integral, phi = psi / r off the axis and the axis limit on r = 0.
RadialField solve(const RadialSource& src, const CharGrid& grid, const SolveOptions& options = {});

/// Field holding phi = fn(t, r) at every node (psi = r phi). Used for
/// iteration seeds and for analytic reference fields.
RadialField tabulate(const CharGrid& grid, const std::function<double(double, double)>& fn);

struct AxisSample {
    double t;
    double phi;
};

/// phi(t, 0) at axis nodes with t in [t_min, t_max].
std::vector<AxisSample> axis_profile(const RadialField& field, double t_min, double t_max);

/// Least-squares slope of log|phi(t, 0)| against log t over [t_min, t_max].
double axis_decay_slope(const RadialField& field, double t_min, double t_max);

} // namespace wavedecay
