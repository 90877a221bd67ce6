#include "wavedecay/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace wavedecay {

std::string format_double(double x)
{
    if (std::isnan(x))
        return {};
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return {buf.data(), end};
}

namespace {

nlohmann::json number_or_null(double x)
{
    if (std::isfinite(x))
        return x;
    return nullptr;
}

nlohmann::json vec3(const Eigen::Vector3d& x) { return nlohmann::json::array({x(0), x(1), x(2)}); }

} // namespace

void write_field_csv(const RadialField& field, std::ostream& os)
{
    os << "u,v,t,r,psi,phi\n";
    const auto& grid = field.grid();
    field.for_each_node([&](Eigen::Index i, Eigen::Index j, double t, double r, double psi, double phi) {
        os << format_double(grid.u(i)) << ',' << format_double(grid.v(j)) << ',' << format_double(t) << ','
           << format_double(r) << ',' << format_double(psi) << ',' << format_double(phi) << '\n';
    });
}

void write_plot_csv(const RadialField& field, const WeightExponents& w, std::ostream& os)
{
    os << "t,r,phi,weighted_phi\n";
    field.for_each_node([&](Eigen::Index, Eigen::Index, double t, double r, double, double phi) {
        os << format_double(t) << ',' << format_double(r) << ',' << format_double(phi) << ','
           << format_double(weighted_amplitude(phi, t, r, w)) << '\n';
    });
}

void write_trace_csv(const IterationTrace& trace, std::ostream& os)
{
    os << "step,C_n,diff_norm,ratio\n";
    for (const auto& s : trace.steps)
        os << s.step << ',' << format_double(s.C_n) << ',' << format_double(s.diff_norm) << ','
           << format_double(s.ratio) << '\n';
}

nlohmann::json to_json(const DecayReport& report)
{
    return {
        {"exponents", {{"a", report.exponents.a}, {"b", report.exponents.b}}},
        {"measured_sup", report.measured_sup},
        {"analytic_C", report.analytic_C},
        {"margin", report.margin()},
        {"argmax", {{"t", report.t_argmax}, {"r", report.r_argmax}}},
        {"samples", report.sample_count},
        {"seed", report.seed},
        {"pass", report.pass},
    };
}

nlohmann::json to_json(const ComparisonReport& report)
{
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : report.points)
        points.push_back({{"t", p.point.t},
                          {"x", vec3(p.point.x)},
                          {"phi1", p.phi1},
                          {"phi2", p.phi2},
                          {"margin", p.margin}});
    nlohmann::json violations = nlohmann::json::array();
    for (auto k : report.violations) {
        const auto& p = report.points[k];
        violations.push_back({{"index", k}, {"t", p.point.t}, {"x", vec3(p.point.x)}, {"margin", p.margin}});
    }
    return {{"points", points}, {"violations", violations}, {"tol", report.tol}, {"pass", report.pass()}};
}

nlohmann::json to_json(const IterationTrace& trace)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"step", s.step},
                         {"C_n", number_or_null(s.C_n)},
                         {"diff_norm", number_or_null(s.diff_norm)},
                         {"ratio", number_or_null(s.ratio)},
                         {"induction_bound", number_or_null(s.induction_bound)},
                         {"induction_ok", s.induction_ok}});
    return {
        {"kind", trace.kind == IterationKind::semilinear ? "semilinear" : "potential"},
        {"weights", {{"a", trace.weights.a}, {"b", trace.weights.b}}},
        {"lemma_constant", number_or_null(trace.lemma_constant)},
        {"power", trace.power},
        {"closure_exponent", trace.closure_exponent},
        {"norm", "grid sup over the truncated domain"},
        {"steps", steps},
        {"diverged", trace.diverged},
        {"divergence_reason", trace.divergence_reason},
    };
}

nlohmann::json to_json(const BoundConstants& constants)
{
    return {{"B", constants.B},
            {"C", constants.C},
            {"closed_form_C", constants.closed_form_C},
            {"closed_form_differs", constants.closed_form_differs()},
            {"mu", number_or_null(constants.mu)},
            {"nu", constants.nu}};
}

nlohmann::json to_json(const CheckResult& check)
{
    nlohmann::json out{{"name", check.name},
                       {"pass", check.pass},
                       {"value", check.value},
                       {"bound", check.bound},
                       {"margin", check.margin()}};
    if (check.alternate_bound)
        out["alternate_bound"] = *check.alternate_bound;
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out)
            throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace wavedecay
