#include "whichway/detectors.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace whichway {

namespace {

void require_unit_range(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(name) +
                                    ": must lie in [0, 1]");
}

} // namespace

DetectorOverlapModel DetectorOverlapModel::from_efficiency(double n) {
    require_unit_range(n, "efficiency");
    DetectorOverlapModel m;
    m.efficiency = n;
    m.ov_0_da = 1.0 - n;
    m.ov_db_da = (1.0 - n) * (1.0 - n);
    m.ov_dadb_da = 1.0 - n;
    m.ov_dadb_db = 1.0 - n;
    m.ov_d2_d1 = 1.0 - n;
    return m;
}

DetectorOverlapModel DetectorOverlapModel::with_overlaps(double ov_0_da,
                                                         double ov_db_da,
                                                         double ov_dadb_da,
                                                         double ov_dadb_db,
                                                         double ov_d2_d1) {
    require_unit_range(ov_0_da, "ov_0_da");
    require_unit_range(ov_db_da, "ov_db_da");
    require_unit_range(ov_dadb_da, "ov_dadb_da");
    require_unit_range(ov_dadb_db, "ov_dadb_db");
    require_unit_range(ov_d2_d1, "ov_d2_d1");
    DetectorOverlapModel m;
    m.efficiency = 1.0 - ov_0_da;
    m.ov_0_da = ov_0_da;
    m.ov_db_da = ov_db_da;
    m.ov_dadb_da = ov_dadb_da;
    m.ov_dadb_db = ov_dadb_db;
    m.ov_d2_d1 = ov_d2_d1;
    return m;
}

ImperfectDistributions imperfect_from_perfect(const SetupDistributions& sd,
                                              double n) {
    require_unit_range(n, "efficiency");
    const double m = 1.0 - n;
    const std::size_t count = sd.grid.size();
    ImperfectDistributions imp;
    imp.grid = sd.grid;
    imp.efficiency = n;
    imp.p_da.resize(count);
    imp.p_db.resize(count);
    imp.p_dadb.resize(count);
    imp.p_dab.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        imp.p_da[i] = n * sd.p_da[i] + m * sd.p_ab[i];
        imp.p_db[i] = n * sd.p_db[i] + m * sd.p_ab[i];
        imp.p_dadb[i] = n * n * sd.p_dadb[i] +
                        n * m * (sd.p_da[i] + sd.p_db[i]) + m * m * sd.p_ab[i];
        imp.p_dab[i] = n * sd.p_dab[i] + m * sd.p_ab[i];
    }
    return imp;
}

std::vector<double> imperfect_general(const WaveComponents& wc,
                                      const DetectorOverlapModel& model,
                                      DetectorSetup setup) {
    const std::size_t n = wc.grid.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = wc.psi_a[i];
        const Complex b = wc.psi_b[i];
        const Complex c = wc.psi_ab[i];
        switch (setup) {
        case DetectorSetup::DA:
            out[i] = std::norm(a + c) + std::norm(b) +
                     2.0 * std::real(std::conj(a + c) * b) * model.ov_0_da;
            break;
        case DetectorSetup::DADB:
            out[i] = std::norm(a) + std::norm(b) + std::norm(c) +
                     2.0 * (std::real(std::conj(a) * b) * model.ov_db_da +
                            std::real(std::conj(a) * c) * model.ov_dadb_da +
                            std::real(std::conj(b) * c) * model.ov_dadb_db);
            break;
        case DetectorSetup::DAB:
            out[i] = std::norm(a) + std::norm(b) + std::norm(c) +
                     2.0 * std::real(std::conj(a) * b) +
                     2.0 * std::real(std::conj(a) * c + std::conj(b) * c) *
                         model.ov_d2_d1;
            break;
        }
    }
    return out;
}

SetupDistributions invert_imperfect(const ImperfectDistributions& imp,
                                    const std::vector<double>& p_ab,
                                    double n) {
    if (!(n > 0.0))
        throw std::invalid_argument(
            "invert: efficiency must be positive (n = 0 is singular)");
    if (n > 1.0)
        throw std::invalid_argument("invert: efficiency must be <= 1");
    if (p_ab.size() != imp.grid.size())
        throw std::invalid_argument("invert: P_AB length must match the grid");
    if (n < 1e-3)
        std::cerr << "whichway: warning: efficiency " << n
                  << " amplifies measurement noise by >= 1e6 in the 1/n^2 "
                     "term; the recovered profiles are unreliable\n";

    const double m = 1.0 - n;
    const std::size_t count = imp.grid.size();
    SetupDistributions sd;
    sd.grid = imp.grid;
    sd.p_ab = p_ab;
    sd.p_da.resize(count);
    sd.p_db.resize(count);
    sd.p_dadb.resize(count);
    sd.p_dab.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        sd.p_da[i] = (imp.p_da[i] - m * p_ab[i]) / n;
        sd.p_db[i] = (imp.p_db[i] - m * p_ab[i]) / n;
        sd.p_dadb[i] = (imp.p_dadb[i] + m * m * p_ab[i] -
                        m * (imp.p_da[i] + imp.p_db[i])) /
                       (n * n);
        sd.p_dab[i] = (imp.p_dab[i] - m * p_ab[i]) / n;
    }
    sd.norm = sd.p_ab[sd.grid.center_index()];
    return sd;
}

double delta_av(std::span<const double> p, std::span<const double> q,
                const ScreenGrid& grid, double y1, double y2) {
    const std::size_t n = grid.size();
    if (p.size() != n || q.size() != n)
        throw std::invalid_argument("delta_av: profile lengths must match the grid");
    if (!(y1 < y2))
        throw std::invalid_argument("delta_av: window requires y1 < y2");
    const double slack = 1e-12 * (grid.y.back() - grid.y.front());
    if (y1 < grid.y.front() - slack || y2 > grid.y.back() + slack)
        throw std::invalid_argument("delta_av: window outside the grid");

    std::size_t lo = 0;
    while (lo < n && grid.y[lo] < y1 - slack) ++lo;
    std::size_t hi = n;
    while (hi > 0 && grid.y[hi - 1] > y2 + slack) --hi;
    if (hi - lo < 2)
        throw std::invalid_argument(
            "delta_av: window must contain at least two grid points");

    double acc = 0.0;
    for (std::size_t i = lo; i + 1 < hi; ++i) {
        const double f0 = std::abs(p[i] - q[i]);
        const double f1 = std::abs(p[i + 1] - q[i + 1]);
        acc += 0.5 * (f0 + f1) * (grid.y[i + 1] - grid.y[i]);
    }
    return acc / (y2 - y1);
}

} // namespace whichway
