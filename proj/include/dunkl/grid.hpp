#pragma once

#include <vector>

namespace dunkl {

/// Discretisation of the suprema over r > 0 and x in R: a logarithmic radius
/// lattice and a uniform x lattice.
struct SupGrid {
    double r_min = 1.0 / 256.0;
    double r_max = 256.0;
    int points_per_octave = 8;
    double x_min = -16.0;
    double x_max = 16.0;
    int x_points = 65;

    void validate() const;
    /// r_min 2^{k / points_per_octave}, k = 0, 1, ... up to r_max.
    std::vector<double> radii() const;
    std::vector<double> xs() const;
    /// Nonnegative x lattice points (enough for even integrands).
    std::vector<double> xs_nonnegative() const;
    /// points_per_octave doubled; the old lattice is a sublattice.
    SupGrid refined() const;
};

}  // namespace dunkl
