#include "whichway/detection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "whichway/errors.hpp"

namespace whichway {

namespace {

double sq(const Complex& z) { return std::norm(z); }

} // namespace

SetupDistributions perfect_distributions(const WaveComponents& wc) {
    const std::size_t n = wc.grid.size();
    if (wc.psi_a.size() != n || wc.psi_b.size() != n || wc.psi_ab.size() != n)
        throw std::invalid_argument(
            "wave components: field lengths must match the grid");

    SetupDistributions sd;
    sd.grid = wc.grid;
    sd.p_ab.resize(n);
    sd.p_da.resize(n);
    sd.p_db.resize(n);
    sd.p_dadb.resize(n);
    sd.p_dab.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = wc.psi_a[i];
        const Complex b = wc.psi_b[i];
        const Complex c = wc.psi_ab[i];
        sd.p_ab[i] = sq(a + b + c);
        sd.p_da[i] = sq(a + c) + sq(b);
        sd.p_db[i] = sq(b + c) + sq(a);
        sd.p_dadb[i] = sq(a) + sq(b) + sq(c);
        sd.p_dab[i] = sq(a + b) + sq(c);
    }
    sd.norm = sd.p_ab[sd.grid.center_index()];
    if (!(sd.norm > 0.0))
        throw std::invalid_argument(
            "distributions: central P_AB vanishes (degenerate normalization)");
    return sd;
}

std::vector<double> delta1(const SetupDistributions& sd) {
    std::vector<double> out(sd.p_da.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sd.p_da[i] - sd.p_dadb[i];
    return out;
}

std::vector<double> delta2(const SetupDistributions& sd) {
    std::vector<double> out(sd.p_ab.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sd.p_ab[i] - sd.p_dab[i];
    return out;
}

std::vector<double> born_parameter(const SetupDistributions& sd) {
    std::vector<double> out(sd.p_ab.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sd.p_ab[i] - sd.p_da[i] - sd.p_db[i] - sd.p_dab[i] +
                 2.0 * sd.p_dadb[i];
    return out;
}

std::vector<double> sorkin_parameter(const TripleSlitProbabilities& tp) {
    const std::size_t n = tp.grid.size();
    const bool consistent =
        tp.p_abc.size() == n && tp.p_ab.size() == n && tp.p_ac.size() == n &&
        tp.p_bc.size() == n && tp.p_a.size() == n && tp.p_b.size() == n &&
        tp.p_c.size() == n;
    if (!consistent)
        throw std::invalid_argument(
            "sorkin_parameter: profiles must share one grid");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = tp.p_abc[i] - tp.p_ab[i] - tp.p_ac[i] - tp.p_bc[i] +
                 tp.p_a[i] + tp.p_b[i] + tp.p_c[i];
    return out;
}

TripleSlitProbabilities triple_slit_probabilities(
    const SlitGeometry& geom, std::span<const double> centers,
    const ScreenGrid& grid, const QuadratureSpec& quad, bool classical_only,
    int num_threads) {
    validate(quad);
    if (centers.size() != 3)
        throw std::invalid_argument("triple slit: need exactly 3 centers");
    const double w = geom.slit_width;
    Aperture ap[3];
    for (int s = 0; s < 3; ++s)
        ap[s] = {centers[s] - 0.5 * w, centers[s] + 0.5 * w};
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t)
            if (!(ap[s].hi < ap[t].lo || ap[t].hi < ap[s].lo))
                throw std::invalid_argument(
                    "triple slit: slit intervals overlap");

    const std::size_t n = grid.size();
    std::vector<Complex> psi[3];
    for (auto& v : psi) v.resize(n);
    std::vector<Complex> pair_ab(n), pair_ac(n), pair_bc(n);

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double y = grid.y[i];
            for (int s = 0; s < 3; ++s)
                psi[s][i] = classical_over_interval(ap[s], geom, y, quad);
            if (!classical_only) {
                auto both = [&](int s, int t) {
                    return nonclassical_over_intervals(ap[s], ap[t], geom, y,
                                                       quad) +
                           nonclassical_over_intervals(ap[t], ap[s], geom, y,
                                                       quad);
                };
                pair_ab[i] = both(0, 1);
                pair_ac[i] = both(0, 2);
                pair_bc[i] = both(1, 2);
            }
        }
    };

    unsigned hw = num_threads > 0 ? static_cast<unsigned>(num_threads)
                                  : std::thread::hardware_concurrency();
    if (hw < 2 || n < 64) {
        worker(0, n);
    } else {
        hw = std::min<unsigned>(hw, 64);
        const std::size_t chunk = (n + hw - 1) / hw;
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < hw; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi2 = std::min(n, lo + chunk);
            if (lo >= hi2) break;
            threads.emplace_back([&worker, lo, hi2] { worker(lo, hi2); });
        }
        for (auto& th : threads) th.join();
    }

    TripleSlitProbabilities tp;
    tp.grid = grid;
    tp.p_abc.resize(n);
    tp.p_ab.resize(n);
    tp.p_ac.resize(n);
    tp.p_bc.resize(n);
    tp.p_a.resize(n);
    tp.p_b.resize(n);
    tp.p_c.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = psi[0][i], b = psi[1][i], c = psi[2][i];
        tp.p_a[i] = sq(a);
        tp.p_b[i] = sq(b);
        tp.p_c[i] = sq(c);
        tp.p_ab[i] = sq(a + b + pair_ab[i]);
        tp.p_ac[i] = sq(a + c + pair_ac[i]);
        tp.p_bc[i] = sq(b + c + pair_bc[i]);
        tp.p_abc[i] = sq(a + b + c + pair_ab[i] + pair_ac[i] + pair_bc[i]);
        const bool ok = std::isfinite(tp.p_abc[i]) && std::isfinite(tp.p_ab[i]) &&
                        std::isfinite(tp.p_ac[i]) && std::isfinite(tp.p_bc[i]) &&
                        std::isfinite(tp.p_a[i]) && std::isfinite(tp.p_b[i]) &&
                        std::isfinite(tp.p_c[i]);
        if (!ok)
            throw ConvergenceError("triple slit: non-finite value at y = " +
                                   std::to_string(grid.y[i]));
    }
    return tp;
}

} // namespace whichway
