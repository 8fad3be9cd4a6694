#pragma once

#include <complex>
#include <vector>

#include "whichway/geometry.hpp"

namespace whichway {

/// A fixed set of nodes and weights over one integration interval.
/// Summation order follows node order, so results are reproducible.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Builds a composite rule over [a, b] for an integrand whose path-length
/// varies at most `rate` per unit coordinate. The node budget is
/// nodes_per_wavelength * rate * (b - a) / wavelength, floored at one
/// 8-point panel (Gauss-Legendre) or 9 Simpson nodes.
QuadRule make_rule(double a, double b, double rate, double wavelength,
                   const QuadratureSpec& spec);

template <typename F>
std::complex<double> integrate(const QuadRule& rule, F&& f) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

template <typename F>
std::complex<double> integrate2d(const QuadRule& rp, const QuadRule& rq,
                                 F&& f) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < rp.nodes.size(); ++i) {
        std::complex<double> row{0.0, 0.0};
        for (std::size_t j = 0; j < rq.nodes.size(); ++j)
            row += rq.weights[j] * f(rp.nodes[i], rq.nodes[j]);
        acc += rp.weights[i] * row;
    }
    return acc;
}

} // namespace whichway
