#include "wavedecay/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace wavedecay {
namespace {

void require(bool condition, const char* message)
{
    if (!condition)
        throw HypothesisError(message);
}

QuadOptions check_options(double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("check tolerance must be positive");
    QuadOptions options;
    options.abs_tol = 0.1 * tol;
    options.rel_tol = 1e-12;
    return options;
}

void require_domain(double u, double v) { (void)NullPoint(u, v); }

} // namespace

BoundConstants lemma1_constants(double p, double q)
{
    require(std::isfinite(p) && std::isfinite(q), "exponents must be finite");
    require(p > 2.0, "requires p > 2");
    require(q > 1.0, "requires q > 1");
    BoundConstants k;
    k.B = (2.0 / (q - 1.0) + 1.0 / ((p - 1.0) * (p - 2.0))) / 8.0;
    k.C = 2.0 * k.B * std::max(1.0, 1.0 / (p - 2.0));
    k.closed_form_C = k.C;
    k.mu = std::numeric_limits<double>::quiet_NaN();
    k.nu = p - 2.0;
    return k;
}

BoundConstants lemma2_constants(double p, double q, double lambda)
{
    require(std::isfinite(p) && std::isfinite(q) && std::isfinite(lambda), "exponents must be finite");
    require(p > 0.0, "requires p > 0");
    require(q > 1.0, "requires q > 1");
    require(lambda > 2.0, "requires lambda > 2");
    BoundConstants k;
    k.mu = std::min(q, lambda - 1.0);
    require(k.mu > 1.0, "requires mu = min(q, lambda - 1) > 1");
    k.nu = p + k.mu - 1.0;
    const double bracket_sum = 1.0 + 1.0 / (q - 1.0) + 4.0 / (k.mu - 1.0);
    k.B = bracket_sum / 8.0;
    k.closed_form_C = bracket_sum / 4.0;
    k.C = 2.0 * k.B * std::max(1.0, 1.0 / k.nu);
    return k;
}

CheckResult check_I1_lemma1(double u, double v, double q, double tol)
{
    require(q > 1.0, "requires q > 1");
    require_domain(u, v);
    auto f = [q](double x) { return std::pow(bracket(x), -q); };
    const double value = integrate_1d(f, -u, v, check_options(tol), {0.0}).value;
    const double bound = 2.0 / (q - 1.0);
    return {"I1_lemma1", value <= bound + tol, value, bound, std::nullopt};
}

CheckResult check_I2_lemma1(double u, double v, double q, double tol, std::optional<double> p)
{
    require(q > 2.0, "requires q > 2 (the I2 integral diverges for q <= 2)");
    require_domain(u, v);
    const auto options = check_options(tol);
    auto odd = [q](double x) { return x * std::pow(bracket(x), -q); };
    auto reflected = [q](double x) { return -x * std::pow(bracket(x), -q); };

    const double av = std::abs(v);
    const double cancelling = integrate_1d(odd, -v, av, options, {0.0}).value;
    const double tail = integrate_1d(odd, av, u, options).value;
    const double whole = integrate_1d(reflected, -u, v, options, {0.0}).value;
    const double bound = 1.0 / ((q - 1.0) * (q - 2.0));

    CheckResult result{"I2_lemma1", false, tail, bound, std::nullopt};
    if (p && *p > 2.0)
        result.alternate_bound = 1.0 / ((*p - 1.0) * (*p - 2.0));
    result.pass = std::abs(cancelling) <= tol && std::abs(whole - (cancelling + tail)) <= tol &&
                  tail <= bound + tol;
    return result;
}

CheckResult check_elementary_inequality(double nu, double x)
{
    require(nu > 0.0, "requires nu > 0");
    require(x >= 0.0 && x <= 1.0, "requires 0 <= x <= 1");
    const double lhs = 1.0 - std::pow(x, nu);
    const double factor = std::max(1.0, nu);
    const double rhs = factor * (1.0 - x);
    const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * factor;
    return {"elementary_inequality", lhs <= rhs + rounding, lhs, rhs, std::nullopt};
}

CheckResult check_I1_lemma2(double u, double v, double q, double lambda, double tol)
{
    require(q > 1.0, "requires q > 1");
    require(lambda > 2.0, "requires lambda > 2");
    require_domain(u, v);
    auto f = [=](double x) { return std::pow(bracket(u + x), 1.0 - lambda) * std::pow(bracket(x), -q); };
    const double value = integrate_1d(f, 0.0, u, check_options(tol)).value;
    const double bound = std::pow(1.0 + u, 1.0 - lambda) / (q - 1.0);
    return {"I1_lemma2", value <= bound + tol, value, bound, std::nullopt};
}

CheckResult check_I2_lemma2(double u, double v, double q, double lambda, double tol)
{
    require(q > 1.0, "requires q > 1");
    require(lambda > 2.0, "requires lambda > 2");
    require_domain(u, v);
    const double mu = std::min(q, lambda - 1.0);
    auto f = [=](double x) { return std::pow(bracket(u - x), 1.0 - lambda) * std::pow(bracket(x), -q); };
    const double value = integrate_1d(f, 0.0, std::abs(v), check_options(tol)).value;
    const double bound = (4.0 / (mu - 1.0) + 1.0) * std::pow(1.0 + u, -mu);
    return {"I2_lemma2", value <= bound + tol, value, bound, std::nullopt};
}

CheckResult check_min_identity(double u, double v, double tol)
{
    require_domain(u, v);
    const auto pt = from_null(NullPoint{u, v});
    const double lhs = 1.0 - (1.0 + std::abs(v)) / (1.0 + u);
    const double rhs = 2.0 * std::min(pt.t(), pt.r()) / bracket(u);
    const double gap = std::abs(lhs - rhs);
    return {"min_identity", gap <= tol, gap, tol, std::nullopt};
}

CheckResult check_du_psi_lemma1(double u, double v, double p, double q, double tol)
{
    require(q > 2.0, "requires q > 2");
    const auto k = lemma1_constants(p, q);
    const double value = du_psi(source_lemma1(DecayProfile{1.0, p, q}), NullPoint{u, v});
    const double bound = k.B / std::pow(bracket(u), p - 1.0);
    const double b_q = (2.0 / (q - 1.0) + 1.0 / ((q - 1.0) * (q - 2.0))) / 8.0;
    return {"du_psi_lemma1", value <= bound + tol, value, bound, b_q / std::pow(bracket(u), p - 1.0)};
}

CheckResult check_du_psi_lemma2(double u, double v, double p, double q, double lambda, double tol)
{
    const auto k = lemma2_constants(p, q, lambda);
    const double value = du_psi(source_lemma2(DecayProfile{1.0, p, q, lambda}), NullPoint{u, v});
    const double bound = k.B / std::pow(bracket(u), p + k.mu);
    return {"du_psi_lemma2", value <= bound + tol, value, bound, std::nullopt};
}

ClosureResult closure_nonlinear(double p)
{
    if (!std::isfinite(p))
        return {false, 0.0, "requires finite p"};
    if (!(p > 1.0 + std::sqrt(2.0)))
        return {false, 0.0, "requires p > 1+sqrt(2)"};
    const double lambda = p - 2.0;
    if (!(p > 2.0) || !(p * lambda > 1.0))
        return {false, 0.0, "requires p (p - 2) > 1 and p > 2"};
    return {true, lambda, {}};
}

ClosureResult closure_potential(double lambda)
{
    if (!std::isfinite(lambda))
        return {false, 0.0, "requires finite lambda"};
    if (!(lambda > 2.0))
        return {false, 0.0, "requires lambda > 2"};
    const double q = lambda;
    if (!(q - 1.0 > 1.0))
        return {false, 0.0, "requires q - 1 > 1"};
    return {true, q, {}};
}

DecayReport verify_decay(const RadialField& field, const WeightExponents& w, double analytic_C,
                         const SamplingOptions& options)
{
    if (!(analytic_C > 0.0))
        throw std::invalid_argument("analytic constant must be positive");
    const auto sup = weighted_sup(field, w, options);
    if (sup.samples == 0)
        throw std::invalid_argument("cannot verify decay on an empty field");
    DecayReport report;
    report.exponents = w;
    report.measured_sup = sup.sup;
    report.analytic_C = analytic_C;
    report.sample_count = sup.samples;
    report.t_argmax = sup.t_argmax;
    report.r_argmax = sup.r_argmax;
    report.seed = options.seed;
    report.pass = sup.sup <= analytic_C * (1.0 + kDecaySlack);
    return report;
}

} // namespace wavedecay

namespace wavedecay {

std::size_t SuiteSummary::total_runs() const
{
    std::size_t total = 0;
    for (const auto& [name, n] : runs)
        total += n;
    return total;
}

std::vector<InequalityTuple> random_tuples(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<InequalityTuple> out(count);
    for (auto& tup : out) {
        // u log-uniform over [0, 1e4] with an atom at u = 0
        const double s = unit(rng);
        tup.u = s < 0.02 ? 0.0 : std::pow(1e4 + 1.0, unit(rng)) - 1.0;
        tup.v = tup.u * (2.0 * unit(rng) - 1.0);
        tup.p1 = 2.0 + 1e-2 + 6.0 * unit(rng);
        tup.p2 = 1e-2 + 6.0 * unit(rng);
        tup.q = 1.0 + 1e-2 + 5.0 * unit(rng);
        tup.lambda = 2.0 + 1e-2 + 6.0 * unit(rng);
        tup.nu = 1e-2 + 5.0 * unit(rng);
        tup.x = unit(rng);
    }
    return out;
}

SuiteSummary run_inequality_suite(std::size_t count, std::uint64_t seed, double tol)
{
    SuiteSummary summary;
    summary.tuples = count;
    summary.seed = seed;
    for (const auto& tup : random_tuples(count, seed)) {
        auto record = [&](CheckResult check) {
            ++summary.runs[check.name];
            if (!check.pass) {
                ++summary.violations[check.name];
                summary.failures.push_back({tup, std::move(check)});
            }
        };
        record(check_I1_lemma1(tup.u, tup.v, tup.q, tol));
        if (tup.q > 2.0) {
            record(check_I2_lemma1(tup.u, tup.v, tup.q, tol, tup.p1));
            record(check_du_psi_lemma1(tup.u, tup.v, tup.p1, tup.q, tol));
        }
        record(check_elementary_inequality(tup.nu, tup.x));
        record(check_I1_lemma2(tup.u, tup.v, tup.q, tup.lambda, tol));
        record(check_I2_lemma2(tup.u, tup.v, tup.q, tup.lambda, tol));
        record(check_min_identity(tup.u, tup.v));
        const auto diag = check_du_psi_lemma2(tup.u, tup.v, tup.p2, tup.q, tup.lambda, tol);
        ++summary.diagnostic_runs[diag.name];
        summary.diagnostic_violations[diag.name] += diag.pass ? 0 : 1;
    }
    for (const auto& [name, n] : summary.runs)
        summary.violations.try_emplace(name, 0);
    return summary;
}

} // namespace wavedecay
