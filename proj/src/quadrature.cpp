#include "whichway/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace whichway {

namespace {

// 8-point Gauss-Legendre abscissae/weights on [-1, 1].
constexpr double kGlX[4] = {0.1834346424956498, 0.5255324099163290,
                            0.7966664774136267, 0.9602898564975363};
constexpr double kGlW[4] = {0.3626837833783620, 0.3137066458778873,
                            0.2223810344533746, 0.1012285362903763};
constexpr int kPanelOrder = 8;

int node_budget(double a, double b, double rate, double wavelength, int npw) {
    const double var = rate * (b - a);           // total path-length variation
    const double n = static_cast<double>(npw) * var / wavelength;
    return std::max(1, static_cast<int>(std::ceil(n)));
}

} // namespace

QuadRule make_rule(double a, double b, double rate, double wavelength,
                   const QuadratureSpec& spec) {
    QuadRule rule;
    const int budget =
        node_budget(a, b, rate, wavelength, spec.nodes_per_wavelength);

    if (spec.scheme == QuadScheme::GaussLegendre) {
        const int panels = (budget + kPanelOrder - 1) / kPanelOrder;
        const double h = (b - a) / panels;
        rule.nodes.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
        rule.weights.reserve(rule.nodes.capacity());
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * h;
            const double half = 0.5 * h;
            for (int i = 3; i >= 0; --i) {
                rule.nodes.push_back(mid - half * kGlX[i]);
                rule.weights.push_back(half * kGlW[i]);
            }
            for (int i = 0; i < 4; ++i) {
                rule.nodes.push_back(mid + half * kGlX[i]);
                rule.weights.push_back(half * kGlW[i]);
            }
        }
    } else {
        // Composite Simpson: odd node count, uniform spacing.
        int n = std::max(9, budget);
        if (n % 2 == 0) ++n;
        const int intervals = n - 1;
        const double h = (b - a) / intervals;
        rule.nodes.resize(n);
        rule.weights.resize(n);
        for (int i = 0; i < n; ++i) {
            rule.nodes[i] = a + i * h;
            rule.weights[i] = (i == 0 || i == n - 1) ? h / 3.0
                              : (i % 2 == 1)         ? 4.0 * h / 3.0
                                                     : 2.0 * h / 3.0;
        }
        rule.nodes.back() = b;
    }
    return rule;
}

} // namespace whichway
