#pragma once

#include <complex>
#include <optional>

namespace dunkl {

/// The Dunkl parameter alpha together with the constants derived from it.
///
/// d_alpha is the homogeneous dimension, A_alpha normalises the measure
/// dmu = A |x|^{2 alpha + 1} dx, b_alpha gives mu(B(0,R)) = b R^d, and
/// c_alpha normalises the theta-integral translation formula. c_alpha is
/// absent at alpha = -1/2, where translation is the classical shift.
struct DunklParams {
    double alpha = 0.0;
    double d_alpha = 2.0;
    double A_alpha = 0.5;
    double b_alpha = 0.5;
    std::optional<double> c_alpha;

    bool classical() const noexcept { return !c_alpha.has_value(); }
    /// Exponent of |x| in the measure density.
    double weight_exponent() const noexcept { return 2.0 * alpha + 1.0; }
    /// Density A |x|^{2 alpha + 1}.
    double density(double x) const;
};

/// Throws DomainError for alpha < -1/2.
DunklParams make_params(double alpha);

/// B(c, r) = { y : |y| in ]max(0, |c| - r), |c| + r[ }. The ball is symmetric
/// under y -> -y, so it is described by its radial interval.
struct Ball {
    double center = 0.0;
    double radius = 1.0;

    double inner() const noexcept;
    double outer() const noexcept;
    bool contains(double y) const noexcept;
};

double measure_ball(const DunklParams& params, const Ball& ball);

/// Lanczos approximation (g = 7, 9 terms), reflected below 1/2.
/// Throws DomainError at the poles 0, -1, -2, ...
double gamma_fn(double x);

/// Modified spherical Bessel function
///   J_order(z) = Gamma(order + 1) sum_n (z/2)^{2n} / (n! Gamma(n + order + 1))
/// at real z. Throws RangeError when the value overflows.
double bessel_j_mod(double order, double z);
/// Same function; the parameter block is accepted for call-site symmetry.
double bessel_j_mod(const DunklParams& params, double order, double z);

/// Normalised Bessel function j_nu(t) = Gamma(nu + 1) (2/t)^nu J_nu(t), i.e.
/// the modified spherical Bessel function evaluated on the imaginary axis.
double normalized_bessel_j(double nu, double t);

/// E_alpha(i lambda x) = j_alpha(lambda x) + i lambda x / (2(alpha+1)) j_{alpha+1}(lambda x).
std::complex<double> dunkl_kernel(const DunklParams& params, double lambda, double x);

}  // namespace dunkl
