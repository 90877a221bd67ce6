#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "wavedecay/char_grid.hpp"
#include "wavedecay/parallel.hpp"

namespace wavedecay {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Acceptance: error_estimate <= max(abs_tol, rel_tol * |value|).
struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    std::size_t max_evaluations = 1'000'000;
};

/// Raised when the tolerance cannot be met; carries the best estimate reached.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_(best)
    {
    }

    const QuadResult& best() const noexcept { return best_; }

private:
    QuadResult best_;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// 3-point Gauss-Legendre on [-1, 1], used by the cumulative 2D kernel.
inline constexpr std::array<double, 3> kGl3Nodes = {-0.774596669241483377035853079956480, 0.0,
                                                    0.774596669241483377035853079956480};
inline constexpr std::array<double, 3> kGl3Weights = {0.555555555555555555555555555555556,
                                                      0.888888888888888888888888888888889,
                                                      0.555555555555555555555555555555556};

struct Segment {
    double a;
    double b;
    double value;
    double error;
};

inline bool less_error(const Segment& lhs, const Segment& rhs) { return lhs.error < rhs.error; }

void check_finite_sample(double fx, double x);

template <typename F>
Segment gk15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    check_finite_sample(fc, center);

    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> fv1{};
    std::array<double, 7> fv2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        check_finite_sample(f1, center - dx);
        check_finite_sample(f2, center + dx);
        fv1[static_cast<std::size_t>(j)] = f1;
        fv2[static_cast<std::size_t>(j)] = f2;
        resk += kWgk[static_cast<std::size_t>(j)] * (f1 + f2);
        resabs += kWgk[static_cast<std::size_t>(j)] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            resg += kWg[static_cast<std::size_t>(j / 2)] * (f1 + f2);
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (std::size_t j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    return {a, b, value, err};
}

std::vector<double> breakpoints(double a, double b, const std::vector<double>& kinks);

} // namespace detail

/// Global adaptive Gauss-Kronrod integration of f over [a, b]. The range is
/// split at every interior kink before refinement, so derivative
/// discontinuities sit on segment boundaries. Throws QuadratureError when the
/// evaluation budget is exhausted first.
template <typename F>
QuadResult integrate_1d(F&& f, double a, double b, const QuadOptions& options,
                        const std::vector<double>& kinks = {})
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integrate_1d requires finite limits");
    if (a > b)
        throw std::invalid_argument("integrate_1d requires a <= b");
    if (!(options.abs_tol > 0.0) && !(options.rel_tol > 0.0))
        throw std::invalid_argument("integrate_1d requires a positive tolerance");
    if (a == b)
        return {};

    std::vector<detail::Segment> heap;
    std::size_t evaluations = 0;
    const auto points = detail::breakpoints(a, b, kinks);
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        heap.push_back(detail::gk15(f, points[k], points[k + 1]));
        evaluations += 15;
    }
    std::make_heap(heap.begin(), heap.end(), detail::less_error);

    double value = 0.0;
    double error = 0.0;
    for (const auto& s : heap) {
        value += s.value;
        error += s.error;
    }

    auto target = [&](double v) { return std::max(options.abs_tol, options.rel_tol * std::abs(v)); };

    while (error > target(value)) {
        // confirm with exact sums; the running totals drift
        double exact_value = 0.0;
        double exact_error = 0.0;
        for (const auto& s : heap) {
            exact_value += s.value;
            exact_error += s.error;
        }
        value = exact_value;
        error = exact_error;
        if (error <= target(value))
            break;

        if (evaluations + 30 > options.max_evaluations)
            throw QuadratureError("integrate_1d: evaluation budget exhausted before tolerance",
                                  {value, error, evaluations});

        std::pop_heap(heap.begin(), heap.end(), detail::less_error);
        const detail::Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw QuadratureError("integrate_1d: segment cannot be subdivided further",
                                  {value, error, evaluations});
        const auto left = detail::gk15(f, worst.a, mid);
        const auto right = detail::gk15(f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), detail::less_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), detail::less_error);
    }

    double exact_value = 0.0;
    double exact_error = 0.0;
    for (const auto& s : heap) {
        exact_value += s.value;
        exact_error += s.error;
    }
    return {exact_value, exact_error, evaluations};
}

template <typename F>
QuadResult integrate_1d(F&& f, double a, double b, double tol, const std::vector<double>& kinks = {})
{
    QuadOptions options;
    options.abs_tol = tol;
    return integrate_1d(std::forward<F>(f), a, b, options, kinks);
}

/// Integral of f over [a, inf) through the map x = a + s / (1 - s), s in [0, 1).
template <typename F>
QuadResult integrate_to_infinity(F&& f, double a, const QuadOptions& options,
                                 const std::vector<double>& kinks = {})
{
    auto mapped = [&](double s) {
        const double one_minus = 1.0 - s;
        const double x = a + s / one_minus;
        return f(x) / (one_minus * one_minus);
    };
    std::vector<double> mapped_kinks;
    mapped_kinks.reserve(kinks.size());
    for (double k : kinks)
        if (k > a)
            mapped_kinks.push_back((k - a) / (1.0 + k - a));
    return integrate_1d(mapped, 0.0, 1.0, options, mapped_kinks);
}

/// psi-table of (1/4) * int_{|v|}^{u} int_{-u'}^{v} H(u', v') dv' du' at every
/// grid node. Each (u, v) cell is integrated with a tensor 3-point
/// Gauss-Legendre rule; the inner v-integral is accumulated along each u
/// Gauss line and the outer u-integral is a prefix sum down each v-column, so
/// the whole table costs O(N_u * N_v) evaluations of H. The scheme is of order
/// six in the cell size for smooth H. Entries outside |v| <= u are NaN.
template <typename HFn>
Eigen::MatrixXd cumulative_triangle(HFn&& H, const CharGrid& grid)
{
    const Eigen::Index n = grid.u_count() - 1;
    const Eigen::Index center = n;
    const auto& u = grid.u_nodes();
    const auto& v = grid.v_nodes();

    Eigen::MatrixXd psi =
        Eigen::MatrixXd::Constant(n + 1, grid.v_count(), std::numeric_limits<double>::quiet_NaN());
    for (Eigen::Index j = 0; j < grid.v_count(); ++j)
        psi(std::abs(j - center), j) = 0.0;

    auto gauss = [&H](double ug, double lo, double hi) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (std::size_t k = 0; k < 3; ++k)
            acc += detail::kGl3Weights[k] * H(ug, mid + half * detail::kGl3Nodes[k]);
        return acc * half;
    };

    parallel_for(0, n, [&](std::ptrdiff_t cell) {
        const auto i = static_cast<Eigen::Index>(cell);
        const double ua = u[static_cast<std::size_t>(i)];
        const double ub = u[static_cast<std::size_t>(i + 1)];
        const double mid = 0.5 * (ua + ub);
        const double half = 0.5 * (ub - ua);
        const Eigen::Index lo = center - i;
        const Eigen::Index hi = center + i;
        Eigen::VectorXd increment = Eigen::VectorXd::Zero(hi - lo + 1);
        for (std::size_t g = 0; g < 3; ++g) {
            const double ug = mid + half * detail::kGl3Nodes[g];
            const double wg = half * detail::kGl3Weights[g];
            // inner integral from -ug up to v_j, starting with the sliver [-ug, -ua]
            double inner = gauss(ug, -ug, -ua);
            increment(0) += wg * inner;
            for (Eigen::Index j = lo; j < hi; ++j) {
                inner += gauss(ug, v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j + 1)]);
                increment(j + 1 - lo) += wg * inner;
            }
        }
        for (Eigen::Index j = lo; j <= hi; ++j)
            psi(i + 1, j) = 0.25 * increment(j - lo);
    });

    for (Eigen::Index j = 0; j < grid.v_count(); ++j) {
        const Eigen::Index start = std::abs(j - center);
        for (Eigen::Index i = start + 1; i <= n; ++i)
            psi(i, j) += psi(i - 1, j);
    }
    return psi;
}

} // namespace wavedecay
