#pragma once

#include <cstddef>
#include <vector>

namespace whichway {

/// Fixed physical parameters of the two-slit setup. All lengths in meters.
///
/// The source sits at (-S, 0), the screen at x = D, and the slit plane at
/// x = 0 with slit centers at y = +d/2 (slit A) and y = -d/2 (slit B),
/// each of width w. Everything is immutable after construction.
struct SlitGeometry {
    double source_distance = 0.0;  // S
    double screen_distance = 0.0;  // D
    double slit_separation = 0.0;  // d, center to center
    double slit_width = 0.0;       // w
    double wavelength = 0.0;       // lambda

    double wavenumber() const;  // k = 2*pi/lambda

    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
        double length() const { return hi - lo; }
        double center() const { return 0.5 * (lo + hi); }
    };

    Interval slit_a() const;  // [d/2 - w/2, d/2 + w/2]
    Interval slit_b() const;  // [-d/2 - w/2, -d/2 + w/2]
};

/// Validates and builds a geometry. Throws std::invalid_argument on
/// non-positive lengths or overlapping slits (d <= w).
SlitGeometry make_geometry(double source_distance, double screen_distance,
                           double slit_separation, double slit_width,
                           double wavelength);

/// Ordered sample positions on the detection screen.
struct ScreenGrid {
    std::vector<double> y;  // strictly increasing
    bool symmetric = false; // contains -y for every y, by construction

    std::size_t size() const { return y.size(); }
    /// Index of the sample nearest y = 0 (exact 0 on odd symmetric grids).
    std::size_t center_index() const;
};

/// Uniform grid over [y_min, y_max] with n_points samples. A symmetric grid
/// requires y_min == -y_max and is mirrored around 0 so that -y is present
/// exactly for every y. Throws std::invalid_argument on bad arguments.
ScreenGrid make_grid(double y_min, double y_max, std::size_t n_points,
                     bool symmetric);

enum class QuadScheme { GaussLegendre, Simpson };
enum class PropagationMode { Fraunhofer, Exact };

/// Discretization policy for the slit integrals.
struct QuadratureSpec {
    int nodes_per_wavelength = 16;                   // >= 4
    QuadScheme scheme = QuadScheme::GaussLegendre;
    PropagationMode mode = PropagationMode::Fraunhofer;
};

/// Throws std::invalid_argument if nodes_per_wavelength < 4.
void validate(const QuadratureSpec& spec);

} // namespace whichway
