#pragma once

#include <complex>
#include <span>
#include <vector>

#include "whichway/geometry.hpp"

namespace whichway {

using Complex = std::complex<double>;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class Slit { A, B };

/**
 * Path-segment propagators for the two-slit setup.
 *
 * Three path classes are evaluated by quadrature over the slit apertures:
 *   - free:          straight segment between two points,
 *                    (k/2*pi*i) e^{ik r}/r
 *   - classical:     source -> slit -> screen, one aperture integral
 *   - non-classical: source -> slit P -> slit Q -> screen, a double
 *                    aperture integral over both slits
 *
 * Each comes in an exact form (full path lengths in phase and amplitude)
 * and a paraxial form (quadratic phase expansion around the axis; the
 * non-classical one additionally carries the |y_Q - y_P|^{-1/2} kernel of
 * the stationary-phase reduction of the inter-slit segment). The paraxial
 * forms are the default used for screen-profile production; the exact
 * forms exist for validation.
 *
 * The inter-slit segment of the exact non-classical kernel includes the
 * out-of-plane reduction factor sqrt(2*pi*l2/k) e^{i*pi/4}. Without it the
 * two-crossing kernel does not carry the same dimension as the classical
 * one and the two forms could not be compared; with it, the stationary
 * form is exactly the paraxial limit of the exact form.
 *
 * All functions are pure and safe to call concurrently.
 */

/// Free propagator between two points. Throws std::invalid_argument when
/// the points coincide.
Complex free_propagator(Point r1, Point r2, double k);

Complex classical_propagator_exact(Slit slit, const SlitGeometry& geom,
                                   double y_d, const QuadratureSpec& quad);
Complex classical_propagator_fraunhofer(Slit slit, const SlitGeometry& geom,
                                        double y_d, const QuadratureSpec& quad);
/// Dispatches on quad.mode.
Complex classical_propagator(Slit slit, const SlitGeometry& geom, double y_d,
                             const QuadratureSpec& quad);

/// Non-classical (two-crossing) propagator entering slit `from` first,
/// then slit `to`. Throws std::invalid_argument when from == to.
Complex nonclassical_propagator_exact(Slit from, Slit to,
                                      const SlitGeometry& geom, double y_d,
                                      const QuadratureSpec& quad);
Complex nonclassical_propagator_stationary(Slit from, Slit to,
                                           const SlitGeometry& geom,
                                           double y_d,
                                           const QuadratureSpec& quad);
Complex nonclassical_propagator(Slit from, Slit to, const SlitGeometry& geom,
                                double y_d, const QuadratureSpec& quad);

/// Interval-level variants used for multi-slit layouts. Intervals must be
/// disjoint for the non-classical form.
using Aperture = SlitGeometry::Interval;
Complex classical_over_interval(const Aperture& slit, const SlitGeometry& geom,
                                double y_d, const QuadratureSpec& quad);
Complex nonclassical_over_intervals(const Aperture& from, const Aperture& to,
                                    const SlitGeometry& geom, double y_d,
                                    const QuadratureSpec& quad);

/// Complex fields sampled on a screen grid: psi_a and psi_b from the
/// single-slit (classical) paths, psi_ab from paths through both slits,
/// with both slit orders summed.
struct WaveComponents {
    ScreenGrid grid;
    std::vector<Complex> psi_a;
    std::vector<Complex> psi_b;
    std::vector<Complex> psi_ab;
};

/// Evaluates all three fields over the grid. With classical_only set,
/// psi_ab is identically zero. Grid points are processed in parallel;
/// results are independent of the thread count (num_threads 0 = auto).
/// Throws ConvergenceError if any field value comes out non-finite.
WaveComponents compute_wave_components(const SlitGeometry& geom,
                                       const ScreenGrid& grid,
                                       const QuadratureSpec& quad,
                                       bool classical_only = false,
                                       int num_threads = 0);

/// Max relative change of (psi_a, psi_b, psi_ab) at the probe points when
/// nodes_per_wavelength doubles. Used as the convergence diagnostic.
double self_convergence_estimate(const SlitGeometry& geom,
                                 const QuadratureSpec& quad,
                                 std::span<const double> probe_y);

} // namespace whichway
