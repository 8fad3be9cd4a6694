#include "whichway/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace whichway {

double SlitGeometry::wavenumber() const {
    return 2.0 * std::numbers::pi / wavelength;
}

SlitGeometry::Interval SlitGeometry::slit_a() const {
    return {0.5 * (slit_separation - slit_width),
            0.5 * (slit_separation + slit_width)};
}

SlitGeometry::Interval SlitGeometry::slit_b() const {
    return {-0.5 * (slit_separation + slit_width),
            -0.5 * (slit_separation - slit_width)};
}

SlitGeometry make_geometry(double source_distance, double screen_distance,
                           double slit_separation, double slit_width,
                           double wavelength) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) + ": must be positive and finite");
    };
    positive(source_distance, "source_distance");
    positive(screen_distance, "screen_distance");
    positive(slit_separation, "slit_separation");
    positive(slit_width, "slit_width");
    positive(wavelength, "wavelength");
    if (!(slit_separation > slit_width))
        throw std::invalid_argument(
            "slit_separation: slits overlap (requires d > w)");
    return {source_distance, screen_distance, slit_separation, slit_width,
            wavelength};
}

std::size_t ScreenGrid::center_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (std::abs(y[i]) < std::abs(y[best])) best = i;
    return best;
}

ScreenGrid make_grid(double y_min, double y_max, std::size_t n_points,
                     bool symmetric) {
    if (!(y_min < y_max))
        throw std::invalid_argument("grid: y_min must be < y_max");
    if (n_points < 2)
        throw std::invalid_argument("grid: need at least 2 points");
    if (symmetric && y_min != -y_max)
        throw std::invalid_argument(
            "grid: symmetric grid requires y_min == -y_max");

    ScreenGrid grid;
    grid.symmetric = symmetric;
    grid.y.resize(n_points);
    if (symmetric) {
        // Mirror the upper half so that y[i] == -y[n-1-i] holds exactly.
        const double half = y_max;
        const std::size_t n = n_points;
        for (std::size_t i = n / 2; i < n; ++i) {
            const double t = static_cast<double>(2 * i + 1 - n) /
                             static_cast<double>(n - 1);
            grid.y[i] = half * t;
            grid.y[n - 1 - i] = -grid.y[i];
        }
        if (n % 2 == 1) grid.y[n / 2] = 0.0;
    } else {
        const double h = (y_max - y_min) / static_cast<double>(n_points - 1);
        for (std::size_t i = 0; i < n_points; ++i)
            grid.y[i] = y_min + static_cast<double>(i) * h;
        grid.y.back() = y_max;
    }
    return grid;
}

void validate(const QuadratureSpec& spec) {
    if (spec.nodes_per_wavelength < 4)
        throw std::invalid_argument(
            "nodes_per_wavelength: must be at least 4");
}

} // namespace whichway
