#pragma once

#include <span>
#include <vector>

#include "whichway/detection.hpp"

namespace whichway {

/**
 * Finite-efficiency path markers. A marker that fires with probability n
 * leaves residual overlap between its triggered and untriggered states;
 * the overlaps fix how much slit-to-slit interference survives in each
 * configuration. All overlaps are modeled as reals in [0, 1].
 */
struct DetectorOverlapModel {
    double efficiency = 1.0;  // n
    double ov_0_da = 0.0;     // <0|D_A>
    double ov_db_da = 0.0;    // <D_B|D_A>
    double ov_dadb_da = 0.0;  // <D_A D_B|D_A>
    double ov_dadb_db = 0.0;  // <D_A D_B|D_B>
    double ov_d2_d1 = 0.0;    // <D_2|D_1>

    /// Overlaps generated by a single efficiency: all single-step overlaps
    /// are 1-n, while <D_B|D_A> = (1-n)^2 (two independent markers).
    /// Throws std::invalid_argument for n outside [0, 1].
    static DetectorOverlapModel from_efficiency(double n);

    /// Explicit overlaps; each must lie in [0, 1].
    static DetectorOverlapModel with_overlaps(double ov_0_da, double ov_db_da,
                                              double ov_dadb_da,
                                              double ov_dadb_db,
                                              double ov_d2_d1);
};

/// Profiles measured by n-efficient markers.
struct ImperfectDistributions {
    ScreenGrid grid;
    std::vector<double> p_da;
    std::vector<double> p_db;
    std::vector<double> p_dadb;
    std::vector<double> p_dab;
    double efficiency = 1.0;
};

/// Mixes each perfect profile with the no-detector profile:
///   P'_DA   = n P_DA + (1-n) P_AB           (likewise P'_DB, P'_DAB)
///   P'_DADB = n^2 P_DADB + n(1-n)(P_DA + P_DB) + (1-n)^2 P_AB
/// Throws std::invalid_argument for n outside [0, 1].
ImperfectDistributions imperfect_from_perfect(const SetupDistributions& sd,
                                              double n);

enum class DetectorSetup { DA, DADB, DAB };

/// General-overlap profile for one setup, evaluated from the fields.
/// With overlaps generated from an efficiency this reproduces
/// imperfect_from_perfect exactly; with all overlaps 1 every setup yields
/// P_AB; with all overlaps 0 the perfect profiles come back.
std::vector<double> imperfect_general(const WaveComponents& wc,
                                      const DetectorOverlapModel& model,
                                      DetectorSetup setup);

/// Recovers the perfect profiles from measured imperfect ones:
///   P_DA   = (P'_DA - (1-n) P_AB) / n        (likewise P_DB, P_DAB)
///   P_DADB = (P'_DADB + (1-n)^2 P_AB - (1-n)(P'_DA + P'_DB)) / n^2
/// Throws std::invalid_argument for n <= 0 or n > 1; warns on stderr for
/// n < 1e-3, where the 1/n^2 term amplifies measurement noise past any
/// realistic accuracy.
SetupDistributions invert_imperfect(const ImperfectDistributions& imp,
                                    const std::vector<double>& p_ab, double n);

/// Window-averaged absolute difference of two profiles:
///   (1/(y2-y1)) * trapezoid of |p - q| over [y1, y2].
/// Throws std::invalid_argument when the window leaves the grid.
double delta_av(std::span<const double> p, std::span<const double> q,
                const ScreenGrid& grid, double y1, double y2);

} // namespace whichway
