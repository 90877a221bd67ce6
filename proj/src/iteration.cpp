#include "wavedecay/iteration.hpp"

#include <cmath>
#include <limits>

namespace wavedecay {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double potential_q(const IterationConfig& cfg) { return cfg.q.value_or(cfg.lambda); }

void fail(const IterationConfig& cfg, const std::string& reason)
{
    if (!cfg.allow_out_of_hypothesis)
        throw ConfigError(reason);
}

template <typename MakeSource>
IterationResult iterate(const IterationConfig& cfg, IterationTrace trace,
                        const std::function<double(double, double)>& seed, MakeSource&& make_source)
{
    const CharGrid grid = CharGrid::make(cfg.grid);
    IterationResult result;
    result.iterates.push_back(tabulate(grid, seed));

    IterationStep first;
    first.C_n = weighted_norm(result.iterates.back(), trace.weights, cfg.sampling);
    first.diff_norm = kNaN;
    first.ratio = kNaN;
    first.induction_bound = kNaN;
    trace.steps.push_back(first);

    for (std::size_t n = 1; n <= cfg.max_steps; ++n) {
        const RadialField& prev = result.iterates.back();
        // the seed is known in closed form; later iterates are interpolated
        std::function<double(double, double)> prev_phi;
        if (n == 1)
            prev_phi = seed;
        else
            prev_phi = [&prev](double t, double r) { return prev.phi_at(t, r); };

        // absolute tolerance tracks the iterate's scale so the linear case stays homogeneous
        SolveOptions options;
        options.axis.abs_tol =
            std::max(options.axis.abs_tol * trace.steps.back().C_n, std::numeric_limits<double>::denorm_min());
        options.axis_split_at_grid = n >= 2;
        RadialField next = solve(custom_source(make_source(prev_phi)), grid, options);

        IterationStep step;
        step.step = n;
        step.C_n = weighted_norm(next, trace.weights, cfg.sampling);
        step.diff_norm = weighted_sup_difference(next, prev, trace.weights, cfg.sampling).sup;
        const double prev_diff = trace.steps.back().diff_norm;
        if (n >= 2) {
            if (prev_diff > 0.0)
                step.ratio = step.diff_norm / prev_diff;
            else
                step.ratio = step.diff_norm == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        } else {
            step.ratio = kNaN;
        }
        const double prev_C = trace.steps.back().C_n;
        step.induction_bound = trace.lemma_constant * cfg.amplitude * std::pow(prev_C, trace.power);
        step.induction_ok = !(step.C_n > step.induction_bound * (1.0 + kDecaySlack));
        trace.steps.push_back(step);
        result.iterates.push_back(std::move(next));

        if (!std::isfinite(step.C_n) || step.C_n > cfg.divergence_ceiling) {
            trace.diverged = true;
            trace.divergence_reason = "weighted norm exceeded the divergence ceiling at step " +
                                      std::to_string(n);
            break;
        }
    }
    result.trace = std::move(trace);
    return result;
}

} // namespace

void validate(const IterationConfig& cfg)
{
    if (!(cfg.amplitude >= 0.0) || !std::isfinite(cfg.amplitude))
        throw ConfigError("amplitude must be finite and nonnegative");
    if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon))
        throw ConfigError("seed amplitude epsilon must be positive");
    if (cfg.max_steps < 1)
        throw ConfigError("max_steps must be at least 1");

    if (cfg.kind == IterationKind::semilinear) {
        const auto closure = closure_nonlinear(cfg.p);
        if (!closure.accepted)
            fail(cfg, closure.reason);
        if (!(cfg.p > 1.0))
            throw ConfigError("semilinear iteration requires p > 1 even out of hypothesis");
        return;
    }

    const auto closure = closure_potential(cfg.lambda);
    if (!closure.accepted)
        fail(cfg, closure.reason);
    const double q = potential_q(cfg);
    if (!(q - 1.0 > 1.0))
        fail(cfg, "requires q - 1 > 1");
    if (q > cfg.lambda)
        fail(cfg, "requires q <= lambda");
}

bool IterationTrace::induction_holds() const
{
    for (const auto& s : steps)
        if (!s.induction_ok)
            return false;
    return true;
}

bool IterationTrace::contracting(double threshold, std::size_t from) const
{
    bool any = false;
    for (const auto& s : steps) {
        if (s.step < from)
            continue;
        any = true;
        if (!(s.ratio < threshold))
            return false;
        const double previous = steps[s.step - 1].diff_norm;
        const bool settled = s.diff_norm == 0.0 && previous == 0.0;
        if (!(s.diff_norm < previous) && !settled)
            return false;
    }
    return any;
}

double weighted_norm(const RadialField& field, const WeightExponents& w, const SamplingOptions& options)
{
    return weighted_sup(field, w, options).sup;
}

IterationResult picard_semilinear(const IterationConfig& cfg)
{
    if (cfg.kind != IterationKind::semilinear)
        throw ConfigError("picard_semilinear needs a semilinear configuration");
    validate(cfg);
    const double p = cfg.p;
    const double A = cfg.amplitude;
    const double eps = cfg.epsilon;

    IterationTrace trace;
    trace.kind = IterationKind::semilinear;
    trace.weights = {1.0, p - 2.0};
    trace.power = p;
    trace.closure_exponent = p - 2.0;
    try {
        trace.lemma_constant = lemma1_constants(p, p * (p - 2.0)).C;
    } catch (const HypothesisError&) {
        trace.lemma_constant = kNaN;
    }

    auto seed = [eps, p](double t, double r) {
        return eps / (bracket(t + r) * std::pow(bracket(t - r), p - 2.0));
    };
    auto make_source = [A, p](std::function<double(double, double)> prev) {
        return [A, p, prev = std::move(prev)](double t, double r) {
            const double phi = prev(t, r);
            return A * std::pow(std::abs(phi), p - 1.0) * phi;
        };
    };
    return iterate(cfg, std::move(trace), seed, make_source);
}

IterationResult picard_potential(const IterationConfig& cfg)
{
    if (cfg.kind != IterationKind::potential)
        throw ConfigError("picard_potential needs a potential configuration");
    validate(cfg);
    const double lambda = cfg.lambda;
    const double q = potential_q(cfg);
    const double V0 = cfg.amplitude;
    const double eps = cfg.epsilon;

    IterationTrace trace;
    trace.kind = IterationKind::potential;
    trace.weights = {1.0, q - 1.0};
    trace.power = 1.0;
    try {
        const auto k = lemma2_constants(1.0, q - 1.0, lambda);
        trace.lemma_constant = k.C;
        trace.closure_exponent = k.nu;
    } catch (const HypothesisError&) {
        trace.lemma_constant = kNaN;
        trace.closure_exponent = std::min(q - 1.0, lambda - 1.0);
    }

    auto seed = [eps, q](double t, double r) {
        return eps / (bracket(t + r) * std::pow(bracket(t - r), q - 1.0));
    };
    auto make_source = [V0, lambda](std::function<double(double, double)> prev) {
        return [V0, lambda, prev = std::move(prev)](double t, double r) {
            return -V0 / std::pow(bracket(r), lambda) * prev(t, r);
        };
    };
    return iterate(cfg, std::move(trace), seed, make_source);
}

IterationResult run_iteration(const IterationConfig& cfg)
{
    return cfg.kind == IterationKind::semilinear ? picard_semilinear(cfg) : picard_potential(cfg);
}

} // namespace wavedecay
