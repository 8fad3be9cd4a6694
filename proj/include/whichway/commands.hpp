#pragma once

#include <string>
#include <vector>

#include "whichway/config.hpp"

namespace whichway {

/// Screen profiles for the five detector configurations plus the derived
/// columns, written to cfg.out_path. Exceptions: ConfigError on invalid
/// fields, ConvergenceError when the quadrature misses its gate, IoError
/// on filesystem failure.
void cmd_simulate(const RunConfig& cfg);

/// Efficiency sweep. Writes a Delta'_av summary to cfg.out_path and the
/// per-efficiency primed profiles next to it ("_profiles" inserted before
/// the extension), both with and without the two-slit path contribution.
void cmd_sweep_efficiency(const RunConfig& cfg);

/// Recovers perfect-detector profiles from a measured CSV (columns y_m,
/// P_AB, Pp_DA, Pp_DB, Pp_DADB, Pp_DAB; rows filtered by the n /
/// higher_order columns when present) at the single efficiency in
/// cfg.efficiencies.
void cmd_invert(const RunConfig& cfg, const std::string& measured_path);

/// Triple-slit probabilities and their Sorkin combination.
void cmd_sorkin(const RunConfig& cfg);

/// Rebuilds the RunConfig echoed in a CSV comment header (the lines
/// between [config] and [/config]).
RunConfig config_from_csv_comments(const std::vector<std::string>& comments);

/// "<stem>_profiles<ext>" next to the summary path.
std::string profiles_path_for(const std::string& out_path);

} // namespace whichway
