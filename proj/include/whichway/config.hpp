#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "whichway/geometry.hpp"

namespace whichway {

/// Full description of one run. Lengths are stored in meters; the config
/// file and CLI accept nm/um/mm/m suffixes. Defaults reproduce the
/// standard case study (810 nm light, 500 nm slits 2000 nm apart, source
/// and screen at 1 mm).
struct RunConfig {
    double lambda = 810e-9;
    double slit_width = 500e-9;
    double slit_separation = 2000e-9;
    double source_distance = 1e-3;
    double screen_distance = 1e-3;

    double grid_min = -1.75e-3;
    double grid_max = 1.75e-3;
    std::size_t grid_points = 7001;
    bool symmetric = true;

    int nodes_per_wavelength = 16;
    QuadScheme scheme = QuadScheme::GaussLegendre;
    PropagationMode mode = PropagationMode::Fraunhofer;
    bool classical_only = false;

    std::vector<double> efficiencies = {0.25, 0.5, 0.75, 1.0};
    double window_lo = -1.75e-3;
    double window_hi = 1.75e-3;

    std::vector<double> slit_centers = {};  // three-slit layouts; empty =
                                            // {-d, 0, +d} derived at run time
    double convergence_tol = 1e-6;
    std::string out_path;

    bool operator==(const RunConfig&) const = default;

    SlitGeometry geometry() const;   // throws ConfigError on bad fields
    ScreenGrid grid() const;
    QuadratureSpec quadrature() const;
    std::vector<double> sorkin_centers() const;
};

/// Parses "810nm", "1.75mm", "0.5um", "1e-3" (bare numbers are meters).
double parse_length(std::string_view text);

/// Applies one "key = value" assignment. Throws ConfigError naming the
/// offending key on unknown keys or malformed values.
void apply_config_line(RunConfig& cfg, std::string_view line);

/// Reads a flat key = value file ('#' starts a comment line).
RunConfig load_config_file(const std::string& path);

/// Canonical echo of every field, one "key = value" line each, in meters.
/// Feeding the lines back through apply_config_line reproduces the config.
std::string config_echo(const RunConfig& cfg);

/// FNV-1a 64-bit over the canonical echo.
std::uint64_t config_hash(const RunConfig& cfg);

} // namespace whichway
