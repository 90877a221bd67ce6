#include "wavedecay/radial_solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/QR>

namespace wavedecay {

RadialSource source_lemma1(const DecayProfile& profile)
{
    const double A = profile.amplitude_A;
    const double p = profile.p;
    const double q = profile.q;
    return {[A, p, q](double t, double r) {
                return A / (std::pow(bracket(t + r), p) * std::pow(bracket(t - r), q));
            },
            profile};
}

RadialSource source_lemma2(const DecayProfile& profile)
{
    if (!(profile.lambda > 0.0))
        throw std::invalid_argument("spatially decaying source requires lambda > 0");
    const double A = profile.amplitude_A;
    const double p = profile.p;
    const double q = profile.q;
    const double lambda = profile.lambda;
    return {[A, p, q, lambda](double t, double r) {
                return A / (std::pow(bracket(r), lambda) * std::pow(bracket(t + r), p) *
                            std::pow(bracket(t - r), q));
            },
            profile};
}

RadialSource custom_source(std::function<double(double, double)> evaluator)
{
    return {std::move(evaluator), std::nullopt};
}

double h_of_uv(const RadialSource& src, const NullPoint& np) { return h_of_uv(src, np.u(), np.v()); }

QuadOptions pointwise_options()
{
    QuadOptions options;
    options.abs_tol = 1e-15;
    options.rel_tol = 1e-11;
    return options;
}

namespace {

// D(u, v) = int_{-u}^{v} H(u, v') dv'
double inner_integral(const RadialSource& src, double u, double v, const QuadOptions& options)
{
    auto integrand = [&](double vp) { return h_of_uv(src, u, vp); };
    return integrate_1d(integrand, -u, v, options, {0.0}).value;
}

} // namespace

double du_psi(const RadialSource& src, const NullPoint& np, const QuadOptions& options)
{
    return 0.25 * inner_integral(src, np.u(), np.v(), options);
}

double dv_psi(const RadialSource& src, const NullPoint& np, const QuadOptions& options)
{
    const double v = np.v();
    const double lower = std::abs(v);
    auto along_u = [&](double up) { return h_of_uv(src, up, v); };
    double value = integrate_1d(along_u, lower, np.u(), options).value;
    if (v > 0.0)
        value -= inner_integral(src, lower, v, options);
    return 0.25 * value;
}

double phi_on_axis(const RadialSource& src, double t, const QuadOptions& options)
{
    const NullPoint axis{t, t};
    return du_psi(src, axis, options) - dv_psi(src, axis, options);
}

double point_phi(const RadialSource& src, const SpacetimePoint& pt, const QuadOptions& options)
{
    if (pt.r() == 0.0)
        return phi_on_axis(src, pt.t(), options);
    const NullPoint np = to_null(pt);
    QuadOptions inner = options;
    inner.abs_tol = options.abs_tol * 1e-2;
    inner.rel_tol = options.rel_tol * 1e-2;
    auto outer = [&](double up) { return inner_integral(src, up, np.v(), inner); };
    const double psi = 0.25 * integrate_1d(outer, std::abs(np.v()), np.u(), options).value;
    return psi / pt.r();
}

RadialField::RadialField(CharGrid grid, Eigen::MatrixXd psi, Eigen::MatrixXd phi)
    : grid_(std::move(grid)), psi_(std::move(psi)), phi_(std::move(phi))
{
    if (psi_.rows() != grid_.u_count() || psi_.cols() != grid_.v_count() ||
        phi_.rows() != psi_.rows() || phi_.cols() != psi_.cols())
        throw std::invalid_argument("field tables do not match the grid shape");
}

double RadialField::phi_at(double t, double r) const
{
    const SpacetimePoint pt{t, r};
    const double u = pt.t() + pt.r();
    const double v = pt.t() - pt.r();
    const Eigen::Index i = grid_.locate_u(u);
    const Eigen::Index j = grid_.locate_v(v);

    const double s = (u - grid_.u(i)) / (grid_.u(i + 1) - grid_.u(i));
    const double w = (v - grid_.v(j)) / (grid_.v(j + 1) - grid_.v(j));
    const double f00 = phi_(i, j);
    const double f10 = phi_(i + 1, j);
    const double f01 = phi_(i, j + 1);
    const double f11 = phi_(i + 1, j + 1);

    const bool has00 = grid_.contains(i, j);
    const bool has01 = grid_.contains(i, j + 1);
    if (has00 && has01)
        return (1 - s) * (1 - w) * f00 + s * (1 - w) * f10 + (1 - s) * w * f01 + s * w * f11;
    if (has00)  // cell on the v > 0 edge: corner (i, j+1) lies outside
        return f00 + s * (f10 - f00) + w * (f11 - f10);
    if (has01)  // cell on the v < 0 edge: corner (i, j) lies outside
        return f11 + (s - 1) * (f11 - f01) + (w - 1) * (f11 - f10);
    throw std::logic_error("interpolation cell has no admissible corner");
}

RadialField solve(const RadialSource& src, const CharGrid& grid, const SolveOptions& options)
{
    auto H = [&src](double u, double v) { return h_of_uv(src, u, v); };
    Eigen::MatrixXd psi = cumulative_triangle(H, grid);
    Eigen::MatrixXd phi =
        Eigen::MatrixXd::Constant(psi.rows(), psi.cols(), std::numeric_limits<double>::quiet_NaN());

    const Eigen::Index c = grid.center();
    for (Eigen::Index j = 0; j < grid.v_count(); ++j) {
        const Eigen::Index start = std::abs(j - c);
        for (Eigen::Index i = start; i < grid.u_count(); ++i) {
            const double r = 0.5 * (grid.u(i) - grid.v(j));
            if (r > 0.0)
                phi(i, j) = psi(i, j) / r;
        }
    }
    parallel_for(0, grid.u_count(), [&](std::ptrdiff_t k) {
        const auto i = static_cast<Eigen::Index>(k);
        if (!options.axis_split_at_grid) {
            phi(i, c + i) = phi_on_axis(src, grid.u(i), options.axis);
            return;
        }
        // phi(t, 0) = (1/2) D(t, t) with the v-nodes strictly inside (-t, t) as breaks
        const double t = grid.u(i);
        const auto first = grid.v_nodes().begin() + (c - i + 1);
        const std::vector<double> lines(first, first + std::max<Eigen::Index>(2 * i - 1, 0));
        auto along = [&](double vp) { return h_of_uv(src, t, vp); };
        phi(i, c + i) = 0.5 * integrate_1d(along, -t, t, options.axis, lines).value;
    });
    return RadialField(grid, std::move(psi), std::move(phi));
}

RadialField tabulate(const CharGrid& grid, const std::function<double(double, double)>& fn)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    Eigen::MatrixXd psi = Eigen::MatrixXd::Constant(grid.u_count(), grid.v_count(), nan);
    Eigen::MatrixXd phi = psi;
    const Eigen::Index c = grid.center();
    for (Eigen::Index j = 0; j < grid.v_count(); ++j) {
        const Eigen::Index start = std::abs(j - c);
        for (Eigen::Index i = start; i < grid.u_count(); ++i) {
            const double t = 0.5 * (grid.u(i) + grid.v(j));
            const double r = 0.5 * (grid.u(i) - grid.v(j));
            phi(i, j) = fn(t, r);
            psi(i, j) = r * phi(i, j);
        }
    }
    return RadialField(grid, std::move(psi), std::move(phi));
}

std::vector<AxisSample> axis_profile(const RadialField& field, double t_min, double t_max)
{
    std::vector<AxisSample> out;
    const auto& grid = field.grid();
    for (Eigen::Index i = 0; i < grid.u_count(); ++i) {
        const double t = grid.u(i);
        if (t >= t_min && t <= t_max)
            out.push_back({t, field.phi()(i, grid.center() + i)});
    }
    return out;
}

double axis_decay_slope(const RadialField& field, double t_min, double t_max)
{
    if (!(t_min > 0.0))
        throw std::invalid_argument("decay slope needs t_min > 0");
    const auto samples = axis_profile(field, t_min, t_max);
    if (samples.size() < 2)
        throw std::invalid_argument("decay slope needs at least two axis nodes in range");
    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto& s = samples[static_cast<std::size_t>(k)];
        if (s.phi == 0.0)
            throw std::domain_error("decay slope undefined: phi vanishes on the axis");
        design(k, 0) = std::log(s.t);
        design(k, 1) = 1.0;
        rhs(k) = std::log(std::abs(s.phi));
    }
    const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(rhs);
    return fit(0);
}

} // namespace wavedecay
