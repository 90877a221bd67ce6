#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "wavedecay/bounds.hpp"
#include "wavedecay/iteration.hpp"
#include "wavedecay/kirchhoff3d.hpp"
#include "wavedecay/radial_solver.hpp"

namespace wavedecay {

/// Shortest decimal string that round-trips to the same double; empty for NaN.
std::string format_double(double x);

/// Header `u,v,t,r,psi,phi`, one row per in-domain node.
void write_field_csv(const RadialField& field, std::ostream& os);

/// Header `t,r,phi,weighted_phi`, one row per in-domain node.
void write_plot_csv(const RadialField& field, const WeightExponents& w, std::ostream& os);

/// Header `step,C_n,diff_norm,ratio`; undefined entries are empty.
void write_trace_csv(const IterationTrace& trace, std::ostream& os);

/// {exponents, measured_sup, analytic_C, margin, argmax:{t,r}, samples, seed, pass}
nlohmann::json to_json(const DecayReport& report);

/// {points:[{t,x,phi1,phi2,margin}], violations:[{index,t,x,margin}], tol, pass}
nlohmann::json to_json(const ComparisonReport& report);

nlohmann::json to_json(const IterationTrace& trace);
nlohmann::json to_json(const BoundConstants& constants);
nlohmann::json to_json(const CheckResult& check);

/// Writes through a temporary sibling file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace wavedecay
