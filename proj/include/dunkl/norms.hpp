#pragma once

#include "dunkl/core.hpp"
#include "dunkl/field.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dunkl {

/// A sup-type norm value with the grid point attaining it.
struct NormResult {
    double value = 0.0;
    double arg_r = 0.0;
    double arg_x = 0.0;
    SupGrid grid;
    bool is_lower_bound = true;
};

/// {"value", "arg_r", "arg_x", "grid", "lower_bound"} with stable key order.
std::string to_json(const NormResult& result);

/// A function sampled on nodes and interpolated by monotone cubic Hermite
/// (PCHIP) splines. Even tables store x >= 0 only. Beyond the last node the
/// values are extrapolated as a power law through the last two nodes
/// (or held constant).
class TabulatedField {
public:
    enum class Tail { power_law, constant };

    TabulatedField() = default;
    /// Samples g at the nodes (sorted and deduplicated; negative nodes are
    /// dropped for even tables). Needs at least four nodes.
    static TabulatedField sample(const std::function<double(double)>& g, std::vector<double> nodes, Parity parity,
                                 Tail tail = Tail::power_law);
    static TabulatedField from_values(std::vector<double> nodes, std::vector<double> values, Parity parity,
                                      Tail tail = Tail::power_law);

    double operator()(double x) const;
    const std::vector<double>& nodes() const;
    const std::vector<double>& values() const;
    Parity parity() const noexcept { return parity_; }
    /// The table as a ScalarField (shares the interpolant).
    ScalarField field() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    Parity parity_ = Parity::even;
};

/// Log-spaced nodes lo 2^{k/ppo} up to hi, with 0 and the extra points
/// added, sorted and deduplicated.
std::vector<double> log_nodes(double lo, double hi, int points_per_octave, const std::vector<double>& extra = {});

/// H(z) = signed int_0^z h dmu, i.e. int_{a}^{b} h dmu = H(b) - H(a).
/// Built from per-segment Chebyshev fits of the density h(t) A |t|^{2a+1},
/// each corrected to match an adaptive integral over its segment; the first
/// segment is a pure power law and beyond z_max the density continues as a
/// power law.
class CumulativeTable {
public:
    CumulativeTable() = default;
    /// `extra_nodes` are added to the segment boundaries (use the nodes of a
    /// tabulated h, where its density is only C^1).
    static CumulativeTable build(const DunklParams& params, const ScalarField& h, double z_max,
                                 const QuadSpec& quad, const std::vector<double>& extra_nodes = {});
    /// c times the measure: H(z) = c b sign(z) |z|^d exactly.
    static CumulativeTable constant(const DunklParams& params, double c);

    double operator()(double z) const;
    /// int h dmu over the whole line (power-law tails extrapolated).
    double total() const;
    bool is_constant() const noexcept { return constant_.has_value(); }
    std::optional<double> constant_value() const noexcept { return constant_; }
    bool even() const noexcept { return even_; }
    /// Positive radii where the density jumps or kinks.
    const std::vector<double>& breaks() const noexcept { return breaks_; }

private:
    struct Side {
        std::vector<double> nodes;   // 0 = z_0 < z_1 < ... < z_N
        std::vector<double> H;       // H at the nodes (nonnegative direction)
        std::vector<std::vector<double>> cheb;  // antiderivative series per segment
        std::vector<double> correction;         // linear correction per segment
        double first_power = 1.0;    // H ~ H(z_1) (z / z_1)^{first_power} on [0, z_1]
        double tail_density = 0.0;   // density at z_N
        double tail_slope = 0.0;     // log-log slope of the density beyond z_N
        bool tail_zero = true;
        double eval(double z) const;
        double total() const;
    };
    static Side build_side(const DunklParams& params, const std::function<double(double)>& density,
                           double origin_exponent, bool origin_log, std::vector<double> nodes,
                           bool zero_beyond, const QuadSpec& quad);

    DunklParams params_;
    std::optional<double> constant_;
    bool even_ = true;
    Side pos_;
    Side neg_;
    std::vector<double> breaks_;
};

/// int_{B(0,r)} tau_x h dmu from the cumulative table of h (swapped order:
/// the inner integral over y is a difference of H at the two roots of
/// |(x, y)_theta| = r).
double ball_integral(const DunklParams& params, const CumulativeTable& table, double x, double r,
                     const QuadSpec& quad);
/// Same route with a caller-supplied H (e.g. a closed form) and the radii
/// where its derivative jumps.
double ball_integral_swapped(const DunklParams& params, const std::function<double(double)>& H,
                             const std::vector<double>& breaks, double x, double r, const QuadSpec& quad);
/// Direct nested quadrature: outer over y in B(0, r), inner translation.
double ball_integral_direct(const DunklParams& params, const ScalarField& h, double x, double r,
                            const QuadSpec& quad);

/// Cumulative table of K^s for kernel norms, covering the grid's ball radii.
CumulativeTable kernel_power_table(const KernelSpec& kernel, double s, const SupGrid& grid, const QuadSpec& quad);

/// Largest |z| the grid's balls reach: max |x| + r_max.
double grid_reach(const SupGrid& grid);

/// Ball integrals of a cumulative table over the grid, r-major.
struct BallGrid {
    std::vector<double> radii;
    std::vector<double> xs;
    std::vector<double> values;
    double at(std::size_t ir, std::size_t ix) const { return values[ir * xs.size() + ix]; }
};
BallGrid ball_grid(const DunklParams& params, const CumulativeTable& table, const SupGrid& grid,
                   const QuadSpec& quad);

/// sup over the grid of phi(r)^{-1} (r^{-d} Q(r, x))^{1/p}.
NormResult generalized_morrey_from_grid(const DunklParams& params, const BallGrid& balls, double p,
                                        const GrowthFunction& phi, const SupGrid& grid);
/// sup over the grid of r^{d(1/q - 1/p)} Q(r, x)^{1/p}.
NormResult morrey_from_grid(const DunklParams& params, const BallGrid& balls, double p, double q,
                            const SupGrid& grid);

/// (int |f|^p dmu)^{1/p}; p = infinity gives a sampled max on [-64, 64].
double lp_norm(const DunklParams& params, const ScalarField& f, double p, const QuadSpec& quad);

NormResult morrey_norm(const DunklParams& params, const ScalarField& f, double p, double q, const SupGrid& grid,
                       const QuadSpec& quad);
NormResult generalized_morrey_norm(const DunklParams& params, const ScalarField& f, double p,
                                   const GrowthFunction& phi, const SupGrid& grid, const QuadSpec& quad);

/// mu(B(0, r))^{-1} int_{B(0,r)} tau_x f dmu.
double ball_mean(const DunklParams& params, const ScalarField& f, double x, double r, const QuadSpec& quad);

/// sup over the grid of phi(r)^{-1} mu(B(0,r))^{-1} int_{B(0,r)} |tau_x f - f_{B(0,r)}(x)| dmu.
NormResult bmo_phi_norm(const DunklParams& params, const ScalarField& f, const GrowthFunction& phi,
                        const SupGrid& grid, const QuadSpec& quad);

/// Mean oscillation data of y -> tau_x f(y) for one x, on all grid radii.
struct Oscillation {
    std::vector<double> radii;
    std::vector<double> means;        ///< f_{B(0,r)}(x)
    std::vector<double> oscillation;  ///< mu(B)^{-1} int_B |tau_x f - mean| dmu
};
Oscillation oscillation_profile(const DunklParams& params, const ScalarField& f, double x,
                                const std::vector<double>& radii, const QuadSpec& quad);

}  // namespace dunkl
