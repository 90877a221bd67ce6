#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "wavedecay/char_grid.hpp"
#include "wavedecay/iteration.hpp"
#include "wavedecay/sampling.hpp"

namespace wavedecay::cli {

enum class Command { verify_lemma1, verify_lemma2, compare, iterate, inequality_suite };
enum class OutputFormat { json, csv };

/// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitBoundViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
    Command command = Command::verify_lemma1;

    // profile; unset values take per-command defaults
    double amplitude = 1.0;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> lambda;

    // iterate
    IterationKind kind = IterationKind::semilinear;
    std::optional<double> iteration_amplitude;  // A (semilinear) or V0 (potential)
    std::optional<double> epsilon;
    std::size_t steps = 6;

    // compare
    std::string modulation = "cos";
    std::size_t points = 50;
    double t_max = 20.0;
    double r_max = 10.0;
    std::size_t majorant_samples = 4096;

    // inequality-suite
    std::size_t count = 1000;

    GridSpec grid;
    std::optional<double> tol;  // compare: 1e-3, inequality-suite: 1e-9
    SamplingOptions sampling;
    std::string out_path;
    std::string plot_path;
    std::string field_path;
    OutputFormat format = OutputFormat::json;
    bool allow_out_of_hypothesis = false;
};

/// Executes one configured run, writing the report to out_path (atomically)
/// or to `out`. Returns kExitPass iff every asserted bound holds.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses flags (and an optional TOML file via --config, overridden by flags)
/// and dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wavedecay::cli
