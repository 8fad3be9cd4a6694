#include "whichway/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "whichway/errors.hpp"
#include "whichway/quadrature.hpp"

namespace whichway {

namespace {

constexpr double kPi = std::numbers::pi;

// i^{3/2} on the principal branch.
const Complex kI32{-std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

Complex phase(double arg) { return {std::cos(arg), std::sin(arg)}; }

// exp(ik(S+D)) / (S D)
Complex gamma_factor(const SlitGeometry& g, double k) {
    return phase(k * (g.source_distance + g.screen_distance)) /
           (g.source_distance * g.screen_distance);
}

// k/(2*pi*i) = -i k/(2*pi)
Complex kernel_unit(double k) { return {0.0, -k / (2.0 * kPi)}; }

double abs_max(const Aperture& s) { return std::max(std::abs(s.lo), std::abs(s.hi)); }

// Bound on |d(path length)/dy| for the two exact segments meeting at the
// aperture; each is |u|/sqrt(u^2 + c^2) < 1.
double rate_exact(const Aperture& s, const SlitGeometry& g, double y_d) {
    const double src = std::min(1.0, abs_max(s) / g.source_distance);
    const double scr = std::min(
        1.0, (std::abs(y_d) + abs_max(s)) / g.screen_distance);
    return src + scr;
}

// The quadratic-phase slope is not clamped at 1: off axis it exceeds the
// exact slope, and panels must track it.
double rate_fraunhofer(const Aperture& s, const SlitGeometry& g, double y_d) {
    return abs_max(s) / g.source_distance +
           (std::abs(y_d) + abs_max(s)) / g.screen_distance;
}

void require_disjoint(const Aperture& from, const Aperture& to) {
    const bool disjoint = from.hi < to.lo || to.hi < from.lo;
    if (!disjoint)
        throw std::invalid_argument(
            "non-classical propagator: slit intervals must be disjoint");
}

void parallel_for(std::size_t n, int num_threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    unsigned hw = num_threads > 0 ? static_cast<unsigned>(num_threads)
                                  : std::thread::hardware_concurrency();
    if (hw < 2 || n < 64) {
        body(0, n);
        return;
    }
    hw = std::min<unsigned>(hw, 64);
    const std::size_t chunk = (n + hw - 1) / hw;
    std::vector<std::thread> workers;
    workers.reserve(hw);
    for (unsigned t = 0; t < hw; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& w : workers) w.join();
}

} // namespace

Complex free_propagator(Point r1, Point r2, double k) {
    const double dx = r2.x - r1.x;
    const double dy = r2.y - r1.y;
    const double r = std::hypot(dx, dy);
    if (r == 0.0)
        throw std::invalid_argument("free_propagator: coincident points");
    return kernel_unit(k) * phase(k * r) / r;
}

Complex classical_over_interval(const Aperture& slit, const SlitGeometry& geom,
                                double y_d, const QuadratureSpec& quad) {
    const double k = geom.wavenumber();
    const double S = geom.source_distance;
    const double D = geom.screen_distance;
    const Complex u = kernel_unit(k);

    if (quad.mode == PropagationMode::Exact) {
        const QuadRule rule = make_rule(slit.lo, slit.hi,
                                        rate_exact(slit, geom, y_d),
                                        geom.wavelength, quad);
        const Complex integral = integrate(rule, [&](double y) {
            const double l1 = std::sqrt(y * y + S * S);
            const double dy = y_d - y;
            const double l2 = std::sqrt(dy * dy + D * D);
            return phase(k * (l1 + l2)) / (l1 * l2);
        });
        return -(u * u) * integral;
    }

    const QuadRule rule = make_rule(slit.lo, slit.hi,
                                    rate_fraunhofer(slit, geom, y_d),
                                    geom.wavelength, quad);
    const Complex integral = integrate(rule, [&](double y) {
        const double dy = y_d - y;
        return phase(k * (y * y / (2.0 * S) + dy * dy / (2.0 * D)));
    });
    return -gamma_factor(geom, k) * (u * u) * integral;
}

Complex nonclassical_over_intervals(const Aperture& from, const Aperture& to,
                                    const SlitGeometry& geom, double y_d,
                                    const QuadratureSpec& quad) {
    require_disjoint(from, to);
    const double k = geom.wavenumber();
    const double S = geom.source_distance;
    const double D = geom.screen_distance;
    // Both variables also drive the inter-slit segment, slope 1 each.
    const double rate_p_base = 1.0;
    const double rate_q_base = 1.0;

    if (quad.mode == PropagationMode::Exact) {
        const QuadRule rp = make_rule(
            from.lo, from.hi,
            rate_p_base + std::min(1.0, abs_max(from) / S), geom.wavelength,
            quad);
        const QuadRule rq = make_rule(
            to.lo, to.hi,
            rate_q_base + std::min(1.0, (std::abs(y_d) + abs_max(to)) / D),
            geom.wavelength, quad);
        const Complex integral = integrate2d(rp, rq, [&](double yp, double yq) {
            const double l1 = std::sqrt(yp * yp + S * S);
            const double l2 = std::abs(yq - yp);
            const double dy = y_d - yq;
            const double l3 = std::sqrt(dy * dy + D * D);
            return phase(k * (l1 + l2 + l3)) / (l1 * l3 * std::sqrt(l2));
        });
        return kI32 * std::pow(k / (2.0 * kPi), 2.5) * integral;
    }

    const QuadRule rp = make_rule(from.lo, from.hi,
                                  rate_p_base + abs_max(from) / S,
                                  geom.wavelength, quad);
    const QuadRule rq = make_rule(
        to.lo, to.hi, rate_q_base + (std::abs(y_d) + abs_max(to)) / D,
        geom.wavelength, quad);
    const Complex integral = integrate2d(rp, rq, [&](double yp, double yq) {
        const double l2 = std::abs(yq - yp);
        const double dy = y_d - yq;
        return phase(k * (yp * yp / (2.0 * S) + l2 + dy * dy / (2.0 * D))) /
               std::sqrt(l2);
    });
    return gamma_factor(geom, k) * kI32 * std::pow(k / (2.0 * kPi), 2.5) *
           integral;
}

namespace {

Aperture pick(Slit s, const SlitGeometry& g) {
    return s == Slit::A ? g.slit_a() : g.slit_b();
}

} // namespace

Complex classical_propagator_exact(Slit slit, const SlitGeometry& geom,
                                   double y_d, const QuadratureSpec& quad) {
    QuadratureSpec q = quad;
    q.mode = PropagationMode::Exact;
    return classical_over_interval(pick(slit, geom), geom, y_d, q);
}

Complex classical_propagator_fraunhofer(Slit slit, const SlitGeometry& geom,
                                        double y_d,
                                        const QuadratureSpec& quad) {
    QuadratureSpec q = quad;
    q.mode = PropagationMode::Fraunhofer;
    return classical_over_interval(pick(slit, geom), geom, y_d, q);
}

Complex classical_propagator(Slit slit, const SlitGeometry& geom, double y_d,
                             const QuadratureSpec& quad) {
    return classical_over_interval(pick(slit, geom), geom, y_d, quad);
}

Complex nonclassical_propagator_exact(Slit from, Slit to,
                                      const SlitGeometry& geom, double y_d,
                                      const QuadratureSpec& quad) {
    if (from == to)
        throw std::invalid_argument(
            "non-classical propagator: slits must differ");
    QuadratureSpec q = quad;
    q.mode = PropagationMode::Exact;
    return nonclassical_over_intervals(pick(from, geom), pick(to, geom), geom,
                                       y_d, q);
}

Complex nonclassical_propagator_stationary(Slit from, Slit to,
                                           const SlitGeometry& geom,
                                           double y_d,
                                           const QuadratureSpec& quad) {
    if (from == to)
        throw std::invalid_argument(
            "non-classical propagator: slits must differ");
    QuadratureSpec q = quad;
    q.mode = PropagationMode::Fraunhofer;
    return nonclassical_over_intervals(pick(from, geom), pick(to, geom), geom,
                                       y_d, q);
}

Complex nonclassical_propagator(Slit from, Slit to, const SlitGeometry& geom,
                                double y_d, const QuadratureSpec& quad) {
    if (from == to)
        throw std::invalid_argument(
            "non-classical propagator: slits must differ");
    return nonclassical_over_intervals(pick(from, geom), pick(to, geom), geom,
                                       y_d, quad);
}

WaveComponents compute_wave_components(const SlitGeometry& geom,
                                       const ScreenGrid& grid,
                                       const QuadratureSpec& quad,
                                       bool classical_only, int num_threads) {
    validate(quad);
    WaveComponents wc;
    wc.grid = grid;
    const std::size_t n = grid.size();
    wc.psi_a.resize(n);
    wc.psi_b.resize(n);
    wc.psi_ab.assign(n, Complex{0.0, 0.0});

    parallel_for(n, num_threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double y = grid.y[i];
            wc.psi_a[i] = classical_propagator(Slit::A, geom, y, quad);
            wc.psi_b[i] = classical_propagator(Slit::B, geom, y, quad);
            if (!classical_only)
                wc.psi_ab[i] =
                    nonclassical_propagator(Slit::A, Slit::B, geom, y, quad) +
                    nonclassical_propagator(Slit::B, Slit::A, geom, y, quad);
        }
    });

    for (std::size_t i = 0; i < n; ++i) {
        const bool ok = std::isfinite(wc.psi_a[i].real()) &&
                        std::isfinite(wc.psi_a[i].imag()) &&
                        std::isfinite(wc.psi_b[i].real()) &&
                        std::isfinite(wc.psi_b[i].imag()) &&
                        std::isfinite(wc.psi_ab[i].real()) &&
                        std::isfinite(wc.psi_ab[i].imag());
        if (!ok)
            throw ConvergenceError("wave components: non-finite value at y = " +
                                   std::to_string(grid.y[i]));
    }
    return wc;
}

double self_convergence_estimate(const SlitGeometry& geom,
                                 const QuadratureSpec& quad,
                                 std::span<const double> probe_y) {
    QuadratureSpec fine = quad;
    fine.nodes_per_wavelength = 2 * quad.nodes_per_wavelength;
    double worst = 0.0;
    auto update = [&worst](Complex coarse, Complex refined) {
        const double scale = std::max(std::abs(refined), 1e-300);
        worst = std::max(worst, std::abs(refined - coarse) / scale);
    };
    for (double y : probe_y) {
        update(classical_propagator(Slit::A, geom, y, quad),
               classical_propagator(Slit::A, geom, y, fine));
        update(classical_propagator(Slit::B, geom, y, quad),
               classical_propagator(Slit::B, geom, y, fine));
        update(nonclassical_propagator(Slit::A, Slit::B, geom, y, quad) +
                   nonclassical_propagator(Slit::B, Slit::A, geom, y, quad),
               nonclassical_propagator(Slit::A, Slit::B, geom, y, fine) +
                   nonclassical_propagator(Slit::B, Slit::A, geom, y, fine));
    }
    return worst;
}

} // namespace whichway
