#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wavedecay/bounds.hpp"
#include "wavedecay/char_grid.hpp"
#include "wavedecay/radial_solver.hpp"
#include "wavedecay/sampling.hpp"

namespace wavedecay {

enum class IterationKind { semilinear, potential };

/// Picard run setup. amplitude is A for F(phi) = A |phi|^(p-1) phi and V0 for
/// V(r) = V0 / <r>^lambda. For the potential run q defaults to lambda.
struct IterationConfig {
    IterationKind kind = IterationKind::semilinear;
    double amplitude = 0.1;
    double p = 3.0;
    double lambda = 3.0;
    std::optional<double> q;
    double epsilon = 0.1;
    std::size_t max_steps = 6;
    GridSpec grid;
    SamplingOptions sampling;
    double divergence_ceiling = 1e12;
    bool allow_out_of_hypothesis = false;
};

/// Raised when a configuration fails its closure condition.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Validates the closure gate; throws ConfigError naming the failed condition
/// unless allow_out_of_hypothesis is set.
void validate(const IterationConfig& cfg);

struct IterationStep {
    std::size_t step = 0;
    double C_n = 0.0;        // weighted grid sup of phi_n
    double diff_norm = 0.0;  // weighted grid sup of phi_n - phi_{n-1}; NaN at step 0
    double ratio = 0.0;      // diff_norm_n / diff_norm_{n-1}; NaN where undefined
    double induction_bound = 0.0;  // C_lemma * amplitude * C_{n-1}^power; NaN at step 0
    bool induction_ok = true;
};

struct IterationTrace {
    IterationKind kind = IterationKind::semilinear;
    WeightExponents weights;
    double lemma_constant = 0.0;
    double power = 1.0;  // exponent on C_n in the induction bound
    double closure_exponent = 0.0;  // <t-r> exponent the lemma returns for the source
    std::vector<IterationStep> steps;
    bool diverged = false;
    std::string divergence_reason;

    bool induction_holds() const;
    /// Strictly decreasing difference norms with ratio < threshold from step
    /// `from` on; a norm that stays exactly zero counts as settled.
    bool contracting(double threshold, std::size_t from = 2) const;
};

/// Weighted grid sup of |phi|; the same measurement verify_decay reports.
double weighted_norm(const RadialField& field, const WeightExponents& w, const SamplingOptions& options = {});

struct IterationResult {
    IterationTrace trace;
    std::vector<RadialField> iterates;  // phi_0 (seed) .. phi_n
};

/// phi_{n+1} = solve(A |phi_n|^(p-1) phi_n) from the seed eps / (<t+r> <t-r>^(p-2)).
IterationResult picard_semilinear(const IterationConfig& cfg);

/// phi_{n+1} = solve(-V phi_n) from the seed eps / (<t+r> <t-r>^(q-1)).
IterationResult picard_potential(const IterationConfig& cfg);

IterationResult run_iteration(const IterationConfig& cfg);

} // namespace wavedecay
