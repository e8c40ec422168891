#pragma once

#include "dunkl/core.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/quadrature.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dunkl {

/// A positive function of r > 0: C r^e, C r^e (1 + |ln r|)^k, or a table
/// interpolated linearly in log-log coordinates (and extrapolated with the
/// end slopes).
class GrowthFunction {
public:
    enum class Family { power, power_log, tabulated };

    GrowthFunction() = default;
    static GrowthFunction power(double C, double e);
    static GrowthFunction power_log(double C, double e, double k);
    static GrowthFunction tabulated(std::vector<std::pair<double, double>> points);
    /// "pow:C=1,e=-0.75", "powlog:C=1,e=-1,k=1" or "table:@file.csv".
    /// Throws DomainError naming the offending token.
    static GrowthFunction parse(const std::string& text);

    double operator()(double r) const;

    Family family() const noexcept { return family_; }
    double coefficient() const noexcept { return C_; }
    double exponent() const noexcept { return e_; }
    double log_power() const noexcept { return k_; }
    const std::vector<std::pair<double, double>>& table() const noexcept { return table_; }
    const std::string& descriptor() const noexcept { return descriptor_; }

    /// Leading exponent as r -> 0 and r -> infinity (end slopes for tables).
    double exponent_at_zero() const;
    double exponent_at_infinity() const;
    /// Power of |ln r| multiplying the leading power (0 unless power_log).
    double log_power_at_ends() const noexcept { return family_ == Family::power_log ? k_ : 0.0; }
    /// Radii where the function is not smooth (r = 1 for power_log, table nodes).
    std::vector<double> kinks() const;

    /// r -> g(r)^s, in the same family.
    GrowthFunction powered(double s) const;
    /// r -> c g(r), in the same family.
    GrowthFunction scaled(double c) const;

private:
    Family family_ = Family::power;
    double C_ = 1.0;
    double e_ = 0.0;
    double k_ = 0.0;
    std::vector<std::pair<double, double>> table_;
    std::string descriptor_ = "pow:C=1,e=0";
};

struct BesselRiesz {
    double beta = 1.0;
    double gamma = 0.0;
};
struct GeneralizedBesselRiesz {
    GrowthFunction rho_tilde;
    double gamma = 0.0;
};
struct RieszType {
    GrowthFunction rho;
};

/// A radial kernel K(x) = k(|x|) together with its power behaviour at the
/// origin and at infinity.
struct KernelSpec {
    std::variant<BesselRiesz, GeneralizedBesselRiesz, RieszType> variant;
    DunklParams params;

    /// Validates the parameter window (0 < beta < d, gamma >= 0).
    static KernelSpec bessel_riesz(const DunklParams& params, double beta, double gamma);
    static KernelSpec generalized(const DunklParams& params, GrowthFunction rho_tilde, double gamma);
    static KernelSpec riesz_type(const DunklParams& params, GrowthFunction rho);

    /// K(x); throws DomainError at x = 0 when the kernel is singular there.
    double operator()(double x) const;
    /// K ~ |x|^e near 0.
    double origin_exponent() const;
    bool origin_log() const;
    /// K ~ |x|^e at infinity.
    double infinity_exponent() const;
    /// Radii where k is not smooth.
    std::vector<double> kinks() const;
    std::string describe() const;
};

double kernel_eval(const KernelSpec& spec, double x);

/// (int |K|^t dmu)^{1/t} by direct quadrature. Throws DomainError outside
/// d/(d + gamma - beta) < t < d/(d - beta) (or when gamma = 0).
double kernel_lt_norm_quadrature(const KernelSpec& spec, double t, const QuadSpec& quad);

struct DyadicSum {
    double value = 0.0;  ///< (sum_k terms)^{1/t}
    double sum = 0.0;    ///< sum_k terms
    double tail = 0.0;   ///< largest of the two boundary terms relative to the sum
    int k_min = 0;
    int k_max = 0;
};

/// Truncated dyadic sum sum_{k=k_min}^{k_max} (2^k R)^{(beta-d)t+d} / (1 + 2^k R)^{gamma t},
/// raised to 1/t. Throws AccuracyError if a boundary term exceeds 1e-12 of
/// the sum. Only defined for Bessel-Riesz kernels.
DyadicSum kernel_lt_norm_dyadic(const KernelSpec& spec, double t, double R, int k_min, int k_max);
/// Same sum with the smallest symmetric k-range whose boundary terms are
/// below 1e-12 of the total.
DyadicSum kernel_lt_norm_dyadic_auto(const KernelSpec& spec, double t, double R);

/// sup over the grid of r^{d(1/t - 1/s)} (int_{B(0,r)} tau_x K^s dmu)^{1/s}.
double kernel_morrey_st_norm(const KernelSpec& spec, double s, double t, const SupGrid& grid,
                             const QuadSpec& quad);
/// sup over the grid of (omega(r) r^{d/s})^{-1} (int_{B(0,r)} tau_x K^s dmu)^{1/s}.
double kernel_morrey_omega_norm(const KernelSpec& spec, double s, const GrowthFunction& omega,
                                const SupGrid& grid, const QuadSpec& quad);

struct ConditionInputs {
    std::optional<GrowthFunction> phi;
    std::optional<GrowthFunction> psi;
    std::optional<GrowthFunction> rho;
    std::optional<GrowthFunction> rho_tilde;
    std::optional<GrowthFunction> omega;
    /// Subject of the doubling and monotonicity checks.
    std::optional<GrowthFunction> subject;
    double p = 2.0;
    double q = 4.0;
    double gamma = 0.0;
    double beta = 1.0;
    double nu = 0.0;
};

struct ConditionGrid {
    double r_min = 1.0 / 1024.0;
    double r_max = 1024.0;
    int points_per_octave = 8;
};

struct ConditionReport {
    std::string condition_id;
    bool holds = false;
    double witness_r = 0.0;
    double witness_ratio = 0.0;
    double constant_estimate = 0.0;
    bool divergent = false;
    std::vector<std::string> warnings;
};

/// Known ids: doubling_3_3a, eq35, eq37, eq39, eq41, eq45, eq46, eq47, eq48,
/// almost_increasing, almost_decreasing, phi_pointwise_power_bound,
/// omega_bracket. Unknown ids throw DomainError.
ConditionReport check_condition(const std::string& condition_id, const ConditionInputs& inputs,
                                const DunklParams& params, const ConditionGrid& grid = {},
                                const QuadSpec& quad = {});

std::vector<std::string> condition_ids();

}  // namespace dunkl
