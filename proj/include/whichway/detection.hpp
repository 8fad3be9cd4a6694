#pragma once

#include <span>
#include <vector>

#include "whichway/propagators.hpp"

namespace whichway {

/**
 * Screen-intensity models for the five detector configurations:
 *
 *   P_AB    = |psi_A + psi_B + psi_AB|^2      no detectors
 *   P_DA    = |psi_A + psi_AB|^2 + |psi_B|^2  marker at slit A
 *   P_DB    = |psi_B + psi_AB|^2 + |psi_A|^2  marker at slit B
 *   P_DADB  = |psi_A|^2 + |psi_B|^2 + |psi_AB|^2   markers at both slits
 *   P_DAB   = |psi_A + psi_B|^2 + |psi_AB|^2  one-or-both marker
 *
 * All profiles share the screen grid of the input fields. `norm` is P_AB at
 * the sample nearest y = 0 and is the scale every emitted column is
 * divided by.
 */
struct SetupDistributions {
    ScreenGrid grid;
    std::vector<double> p_ab;
    std::vector<double> p_da;
    std::vector<double> p_db;
    std::vector<double> p_dadb;
    std::vector<double> p_dab;
    double norm = 0.0;
};

/// Builds all five profiles. Throws std::invalid_argument when the central
/// P_AB value vanishes (degenerate normalization).
SetupDistributions perfect_distributions(const WaveComponents& wc);

/// P_DA - P_DADB, pointwise (equals 2 Re(psi_A conj(psi_AB))).
std::vector<double> delta1(const SetupDistributions& sd);

/// P_AB - P_DAB, pointwise (equals 2 Re((psi_A + psi_B) conj(psi_AB))).
std::vector<double> delta2(const SetupDistributions& sd);

/// P_AB - P_DA - P_DB - P_DAB + 2 P_DADB. Vanishes identically when the
/// five profiles derive from one field triple.
std::vector<double> born_parameter(const SetupDistributions& sd);

/// Detection probabilities of a three-slit layout on a common grid.
struct TripleSlitProbabilities {
    ScreenGrid grid;
    std::vector<double> p_abc;
    std::vector<double> p_ab;
    std::vector<double> p_ac;
    std::vector<double> p_bc;
    std::vector<double> p_a;
    std::vector<double> p_b;
    std::vector<double> p_c;
};

/// P_ABC - P_AB - P_AC - P_BC + P_A + P_B + P_C, pointwise.
/// Throws std::invalid_argument when profile lengths disagree.
std::vector<double> sorkin_parameter(const TripleSlitProbabilities& tp);

/// Builds the seven profiles from three slit apertures centered at
/// `centers` (each of the geometry's slit width): single-slit fields plus
/// pairwise two-crossing corrections (both orders summed). The genuinely
/// three-slit correction has no computable form here and is taken as zero.
/// With classical_only set, the pairwise corrections are zeroed too.
TripleSlitProbabilities triple_slit_probabilities(
    const SlitGeometry& geom, std::span<const double> centers,
    const ScreenGrid& grid, const QuadratureSpec& quad,
    bool classical_only = false, int num_threads = 0);

} // namespace whichway
