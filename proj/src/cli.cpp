#include "wavedecay/cli.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "wavedecay/bounds.hpp"
#include "wavedecay/kirchhoff3d.hpp"
#include "wavedecay/report_io.hpp"

namespace wavedecay::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out)
{
    if (cfg.out_path.empty())
        out << content;
    else
        write_atomic(cfg.out_path, content);
}

template <typename Writer>
void write_side_file(const std::string& path, Writer&& writer)
{
    if (path.empty())
        return;
    std::ostringstream os;
    writer(os);
    write_atomic(path, os.str());
}

json grid_json(const GridSpec& spec, const CharGrid& grid)
{
    return {{"u_max", spec.u_max},
            {"nodes_per_unit", spec.nodes_per_unit},
            {"uniform_limit", spec.uniform_limit},
            {"ratio", spec.ratio},
            {"u_nodes", grid.u_count()},
            {"v_nodes", grid.v_count()}};
}

json slope_json(const RadialField& field, double expected)
{
    const double t_min = 10.0;
    const double t_max = std::min(1000.0, field.grid().u_max());
    json out{{"t_min", t_min}, {"t_max", t_max}, {"expected", expected}};
    try {
        out["measured"] = axis_decay_slope(field, t_min, t_max);
    } catch (const std::exception& e) {
        out["measured"] = nullptr;
        out["note"] = e.what();
    }
    return out;
}

int run_verify(const RunConfig& cfg, bool spatial, std::ostream& out, std::ostream& err)
{
    const double p = cfg.p.value_or(spatial ? 1.0 : 3.0);
    const double q = cfg.q.value_or(spatial ? 3.0 : 2.0);
    const double lambda = spatial ? cfg.lambda.value_or(3.0) : 0.0;

    std::optional<BoundConstants> constants;
    std::string hypothesis_note;
    try {
        constants = spatial ? lemma2_constants(p, q, lambda) : lemma1_constants(p, q);
    } catch (const HypothesisError& e) {
        if (!cfg.allow_out_of_hypothesis)
            throw UsageError(e.what());
        hypothesis_note = e.what();
    }

    const DecayProfile profile{cfg.amplitude, p, q, lambda};
    const CharGrid grid = CharGrid::make(cfg.grid);
    const RadialField field = solve(spatial ? source_lemma2(profile) : source_lemma1(profile), grid);
    const double nu = constants ? constants->nu : (spatial ? p + std::min(q, lambda - 1.0) - 1.0 : p - 2.0);
    const WeightExponents w{1.0, nu};

    json report{{"command", spatial ? "verify-lemma2" : "verify-lemma1"},
                {"profile", {{"A", profile.amplitude_A}, {"p", p}, {"q", q}}},
                {"grid", grid_json(cfg.grid, grid)}};
    if (spatial)
        report["profile"]["lambda"] = lambda;

    bool pass = false;
    if (constants) {
        report["constants"] = to_json(*constants);
        const DecayReport decay = verify_decay(field, w, cfg.amplitude * constants->C, cfg.sampling);
        report["decay"] = to_json(decay);
        pass = decay.pass;
    } else {
        const auto sup = weighted_sup(field, w, cfg.sampling);
        report["out_of_hypothesis"] = hypothesis_note;
        report["decay"] = {{"exponents", {{"a", w.a}, {"b", w.b}}},
                           {"measured_sup", sup.sup},
                           {"analytic_C", nullptr},
                           {"argmax", {{"t", sup.t_argmax}, {"r", sup.r_argmax}}},
                           {"samples", sup.samples},
                           {"seed", cfg.sampling.seed},
                           {"pass", false}};
    }
    report["axis_slope"] = slope_json(field, -(1.0 + nu));
    report["pass"] = pass;

    write_side_file(cfg.field_path, [&](std::ostream& os) { write_field_csv(field, os); });
    write_side_file(cfg.plot_path, [&](std::ostream& os) { write_plot_csv(field, w, os); });
    if (cfg.format == OutputFormat::csv) {
        std::ostringstream os;
        write_field_csv(field, os);
        emit(cfg, os.str(), out);
    } else {
        emit(cfg, report.dump(2) + "\n", out);
    }
    if (!pass)
        err << "decay bound not verified\n";
    return pass ? kExitPass : kExitBoundViolated;
}

std::function<double(double)> modulation_factor(const std::string& name)
{
    static const std::map<std::string, std::function<double(double)>> table{
        {"cos", [](double x1) { return std::cos(x1); }},
        {"cos2", [](double x1) { return std::cos(x1) * std::cos(x1); }},
        {"x1", [](double x1) { return x1 / bracket(x1); }},
        {"negative", [](double) { return -1.0; }},
        {"zero", [](double) { return 0.0; }},
        {"double", [](double) { return 2.0; }},
    };
    const auto it = table.find(name);
    if (it == table.end())
        throw UsageError("unknown modulation '" + name + "' (cos, cos2, x1, negative, zero, double)");
    return it->second;
}

int run_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const double p = cfg.p.value_or(3.0);
    const double q = cfg.q.value_or(2.0);
    const bool spatial = cfg.lambda.has_value();
    const double lambda = cfg.lambda.value_or(0.0);
    try {
        if (spatial)
            (void)lemma2_constants(p, q, lambda);
        else
            (void)lemma1_constants(p, q);
    } catch (const HypothesisError& e) {
        if (!cfg.allow_out_of_hypothesis)
            throw UsageError(e.what());
    }
    const double tol = cfg.tol.value_or(1e-3);
    const DecayProfile profile{cfg.amplitude, p, q, lambda};
    const RadialSource g = spatial ? source_lemma2(profile) : source_lemma1(profile);
    const auto factor = modulation_factor(cfg.modulation);

    VolumetricSource F{[g, factor](double t, const Eigen::Vector3d& x) { return g(t, x.norm()) * factor(x(0)); },
                       g, false};
    const MajorantCheck majorant = verify_majorant(F, cfg.majorant_samples, cfg.t_max, cfg.r_max,
                                                   cfg.sampling.seed);
    json report{{"command", "compare"},
                {"modulation", cfg.modulation},
                {"profile", {{"A", profile.amplitude_A}, {"p", p}, {"q", q}}},
                {"seed", cfg.sampling.seed},
                {"majorant",
                 {{"pass", majorant.pass}, {"samples", majorant.samples}, {"worst_ratio", majorant.worst_ratio}}}};
    if (spatial)
        report["profile"]["lambda"] = lambda;

    bool pass = majorant.pass;
    if (!majorant.pass) {
        if (majorant.witness)
            report["majorant"]["witness"] = {
                {"t", majorant.witness->t},
                {"x", {majorant.witness->x(0), majorant.witness->x(1), majorant.witness->x(2)}}};
        err << "majorant violated; comparison not run\n";
    } else {
        const auto points = quasi_random_spacetime(cfg.points, cfg.t_max, cfg.r_max, cfg.sampling.seed);
        const ComparisonReport comparison = compare(F, points, tol);
        report["comparison"] = to_json(comparison);
        pass = comparison.pass();
        if (cfg.format == OutputFormat::csv) {
            std::ostringstream os;
            os << "t,x1,x2,x3,phi1,phi2,margin\n";
            for (const auto& pt : comparison.points)
                os << format_double(pt.point.t) << ',' << format_double(pt.point.x(0)) << ','
                   << format_double(pt.point.x(1)) << ',' << format_double(pt.point.x(2)) << ','
                   << format_double(pt.phi1) << ',' << format_double(pt.phi2) << ','
                   << format_double(pt.margin) << '\n';
            emit(cfg, os.str(), out);
            return pass ? kExitPass : kExitBoundViolated;
        }
        if (!pass)
            err << comparison.violations.size() << " comparison violation(s)\n";
    }
    report["pass"] = pass;
    emit(cfg, report.dump(2) + "\n", out);
    return pass ? kExitPass : kExitBoundViolated;
}

int run_iterate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    IterationConfig it;
    it.kind = cfg.kind;
    it.grid = cfg.grid;
    it.sampling = cfg.sampling;
    it.max_steps = cfg.steps;
    it.allow_out_of_hypothesis = cfg.allow_out_of_hypothesis;
    if (cfg.kind == IterationKind::semilinear) {
        it.amplitude = cfg.iteration_amplitude.value_or(0.1);
        it.p = cfg.p.value_or(3.0);
        it.epsilon = cfg.epsilon.value_or(0.1);
    } else {
        it.amplitude = cfg.iteration_amplitude.value_or(0.1);
        it.lambda = cfg.lambda.value_or(3.0);
        it.q = cfg.q;
        it.epsilon = cfg.epsilon.value_or(1.0);
    }
    try {
        validate(it);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }

    const IterationResult result = run_iteration(it);
    const auto& trace = result.trace;
    const bool pass = trace.induction_holds() && !trace.diverged;
    if (cfg.format == OutputFormat::csv) {
        std::ostringstream os;
        write_trace_csv(trace, os);
        emit(cfg, os.str(), out);
    } else {
        json report = to_json(trace);
        report["command"] = "iterate";
        report["seed"] = cfg.sampling.seed;
        report["amplitude"] = it.amplitude;
        report["epsilon"] = it.epsilon;
        report["pass"] = pass;
        emit(cfg, report.dump(2) + "\n", out);
    }
    write_side_file(cfg.plot_path,
                    [&](std::ostream& os) { write_plot_csv(result.iterates.back(), trace.weights, os); });
    write_side_file(cfg.field_path, [&](std::ostream& os) { write_field_csv(result.iterates.back(), os); });
    if (trace.diverged)
        err << "iteration diverged: " << trace.divergence_reason << "\n";
    else if (!trace.induction_holds())
        err << "induction inequality violated\n";
    return pass ? kExitPass : kExitBoundViolated;
}

json tuple_json(const InequalityTuple& t)
{
    return {{"u", t.u}, {"v", t.v}, {"p1", t.p1}, {"p2", t.p2}, {"q", t.q},
            {"lambda", t.lambda}, {"nu", t.nu}, {"x", t.x}};
}

int run_suite(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const double tol = cfg.tol.value_or(1e-9);
    const SuiteSummary summary = run_inequality_suite(cfg.count, cfg.sampling.seed, tol);
    if (cfg.format == OutputFormat::csv) {
        std::ostringstream os;
        os << "check,runs,violations\n";
        for (const auto& [name, runs] : summary.runs)
            os << name << ',' << runs << ',' << summary.violations.at(name) << '\n';
        for (const auto& [name, runs] : summary.diagnostic_runs)
            os << name << " (diagnostic)," << runs << ',' << summary.diagnostic_violations.at(name) << '\n';
        emit(cfg, os.str(), out);
    } else {
        json checks = json::object();
        for (const auto& [name, runs] : summary.runs)
            checks[name] = {{"runs", runs}, {"violations", summary.violations.at(name)}};
        json diagnostics = json::object();
        for (const auto& [name, runs] : summary.diagnostic_runs)
            diagnostics[name] = {{"runs", runs}, {"violations", summary.diagnostic_violations.at(name)}};
        json failures = json::array();
        for (const auto& f : summary.failures)
            failures.push_back({{"tuple", tuple_json(f.tuple)}, {"check", to_json(f.check)}});
        json report{{"command", "inequality-suite"},
                    {"tuples", summary.tuples},
                    {"seed", summary.seed},
                    {"tol", tol},
                    {"checks", checks},
                    {"failures", failures},
                    {"diagnostics", diagnostics},
                    {"pass", summary.pass()}};
        emit(cfg, report.dump(2) + "\n", out);
    }
    if (!summary.pass())
        err << summary.failures.size() << " inequality violation(s)\n";
    return summary.pass() ? kExitPass : kExitBoundViolated;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        switch (cfg.command) {
        case Command::verify_lemma1:
            return run_verify(cfg, false, out, err);
        case Command::verify_lemma2:
            return run_verify(cfg, true, out, err);
        case Command::compare:
            return run_compare(cfg, out, err);
        case Command::iterate:
            return run_iterate(cfg, out, err);
        case Command::inequality_suite:
            return run_suite(cfg, out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const QuadratureError& e) {
        err << "numerical failure: " << e.what() << " (best estimate " << e.best().value << " +- "
            << e.best().error_estimate << " after " << e.best().evaluations << " evaluations)\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Decay-estimate verification engine for the 3+1 wave equation"};
    app.set_config("--config", "", "TOML file with option values; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--out", cfg.out_path, "Report path (written atomically); stdout when omitted");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.sampling.seed, "Quasi-random seed (Sobol points skipped)");
    app.add_option("--samples", cfg.sampling.off_grid_samples, "Interpolated off-grid samples per sup");
    app.add_option("--u-max", cfg.grid.u_max, "Grid extent in u = t + r");
    app.add_option("--per-unit", cfg.grid.nodes_per_unit, "Uniform u-nodes per unit length");
    app.add_option("--uniform-limit", cfg.grid.uniform_limit, "End of the uniform part of the u-grid");
    app.add_option("--ratio", cfg.grid.ratio, "Geometric node ratio beyond the uniform part");
    app.add_option("--tol", cfg.tol, "Check tolerance");
    app.add_option("--plot-data", cfg.plot_path, "CSV t,r,phi,weighted_phi for plotting");
    app.add_option("--field-csv", cfg.field_path, "CSV u,v,t,r,psi,phi of the solved field");
    app.add_flag("--allow-out-of-hypothesis", cfg.allow_out_of_hypothesis,
                 "Run even when exponents violate the lemma hypotheses");

    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--A", cfg.amplitude, "Source amplitude")->check(CLI::PositiveNumber);
        sub->add_option("--p", cfg.p, "Exponent on <t+r>");
        sub->add_option("--q", cfg.q, "Exponent on <t-r>");
    };

    auto* lemma1 = app.add_subcommand("verify-lemma1", "Solve A/(<t+r>^p <t-r>^q) and verify its decay bound");
    add_profile(lemma1);
    auto* lemma2 =
        app.add_subcommand("verify-lemma2", "Solve A/(<r>^lambda <t+r>^p <t-r>^q) and verify its decay bound");
    add_profile(lemma2);
    lemma2->add_option("--lambda", cfg.lambda, "Exponent on <r>");

    auto* cmp = app.add_subcommand("compare", "Retarded-potential oracle against a radial majorant");
    add_profile(cmp);
    cmp->add_option("--lambda", cfg.lambda, "Exponent on <r> of the majorant");
    cmp->add_option("--modulation", cfg.modulation, "F = G * m(x1): cos, cos2, x1, negative, zero, double");
    cmp->add_option("--points", cfg.points, "Number of quasi-random comparison points");
    cmp->add_option("--t-max", cfg.t_max, "Largest sampled time");
    cmp->add_option("--r-max", cfg.r_max, "Largest sampled radius");
    cmp->add_option("--majorant-samples", cfg.majorant_samples, "Samples for the majorant check");

    std::string kind = "semilinear";
    auto* iter = app.add_subcommand("iterate", "Picard iteration in the weighted sup-norm");
    iter->add_option("--kind", kind, "semilinear or potential")->check(CLI::IsMember({"semilinear", "potential"}));
    iter->add_option("--A", cfg.iteration_amplitude, "Nonlinearity amplitude (semilinear)");
    iter->add_option("--V0", cfg.iteration_amplitude, "Potential amplitude (potential)");
    iter->add_option("--p", cfg.p, "Nonlinearity power");
    iter->add_option("--lambda", cfg.lambda, "Potential decay exponent");
    iter->add_option("--q", cfg.q, "Weight exponent q (potential; defaults to lambda)");
    iter->add_option("--eps", cfg.epsilon, "Seed amplitude");
    iter->add_option("--steps", cfg.steps, "Number of Picard steps");

    auto* suite = app.add_subcommand("inequality-suite", "Random property checks of every intermediate inequality");
    suite->add_option("--count", cfg.count, "Number of random admissible tuples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    cfg.kind = kind == "potential" ? IterationKind::potential : IterationKind::semilinear;
    if (lemma1->parsed())
        cfg.command = Command::verify_lemma1;
    else if (lemma2->parsed())
        cfg.command = Command::verify_lemma2;
    else if (cmp->parsed())
        cfg.command = Command::compare;
    else if (iter->parsed())
        cfg.command = Command::iterate;
    else
        cfg.command = Command::inequality_suite;
    return run(cfg, out, err);
}

} // namespace wavedecay::cli
