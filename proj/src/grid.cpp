#include "dunkl/grid.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dunkl {

void SupGrid::validate() const {
    if (!(r_min > 0.0)) throw DomainError("grid: r_min must be positive");
    if (!(r_max >= r_min)) throw DomainError("grid: r_max must be >= r_min");
    if (points_per_octave < 1) throw DomainError("grid: points_per_octave must be >= 1");
    if (x_points < 1) throw DomainError("grid: x_points must be >= 1");
    if (!(x_max >= x_min)) throw DomainError("grid: x_max must be >= x_min");
}

std::vector<double> SupGrid::radii() const {
    validate();
    const double octaves = std::log2(r_max / r_min);
    const int n = static_cast<int>(std::floor(octaves * points_per_octave + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        out.push_back(r_min * std::exp2(static_cast<double>(k) / points_per_octave));
    }
    return out;
}

std::vector<double> SupGrid::xs() const {
    validate();
    std::vector<double> out;
    if (x_points == 1) return {0.5 * (x_min + x_max)};
    const double h = (x_max - x_min) / (x_points - 1);
    for (int i = 0; i < x_points; ++i) out.push_back(i + 1 == x_points ? x_max : x_min + h * i);
    return out;
}

std::vector<double> SupGrid::xs_nonnegative() const {
    std::vector<double> out;
    for (double x : xs()) {
        const double a = std::abs(x) < 1e-12 ? 0.0 : std::abs(x);
        out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              out.end());
    return out;
}

SupGrid SupGrid::refined() const {
    SupGrid out = *this;
    out.points_per_octave *= 2;
    return out;
}

}  // namespace dunkl
