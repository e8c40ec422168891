#include "dunkl/core.hpp"

#include "dunkl/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

namespace dunkl {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSeriesTol = 1e-16;
constexpr int kSeriesCap = 300;

// Below this |t| the alternating series loses at most one digit.
constexpr double kAlternatingSeriesLimit = 2.0;

}  // namespace

double DunklParams::density(double x) const {
    return A_alpha * std::pow(std::abs(x), weight_exponent());
}

DunklParams make_params(double alpha) {
    if (!(alpha >= -0.5)) {
        throw DomainError("alpha must be >= -1/2, got " + std::to_string(alpha));
    }
    DunklParams p;
    p.alpha = alpha;
    p.d_alpha = 2.0 * alpha + 2.0;
    const double g = gamma_fn(alpha + 1.0);
    const double two_pow = std::exp2(alpha + 1.0);
    p.A_alpha = 1.0 / (two_pow * g);
    p.b_alpha = 1.0 / (two_pow * (alpha + 1.0) * g);
    if (alpha > -0.5) {
        p.c_alpha = g / (std::sqrt(std::numbers::pi) * gamma_fn(alpha + 0.5));
    }
    return p;
}

double Ball::inner() const noexcept {
    return center == 0.0 ? 0.0 : std::max(0.0, std::abs(center) - radius);
}

double Ball::outer() const noexcept { return std::abs(center) + radius; }

bool Ball::contains(double y) const noexcept {
    const double a = std::abs(y);
    if (center == 0.0) return a < radius;
    return a > inner() && a < outer();
}

double measure_ball(const DunklParams& params, const Ball& ball) {
    if (!(ball.radius > 0.0)) throw DomainError("ball radius must be positive");
    const double d = params.d_alpha;
    return params.b_alpha * (std::pow(ball.outer(), d) - std::pow(ball.inner(), d));
}

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        throw DomainError("gamma_fn: pole at " + std::to_string(x));
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double acc = kLanczosCoef[0];
    for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
        acc += kLanczosCoef[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    const double log_part = (z + 0.5) * std::log(t) - t;
    const double value = std::sqrt(2.0 * std::numbers::pi) * std::exp(log_part) * acc;
    if (!std::isfinite(value)) throw RangeError("gamma_fn overflow at " + std::to_string(x));
    return value;
}

double bessel_j_mod(double order, double z) {
    if (!(order > -1.0)) throw DomainError("bessel_j_mod: order must be > -1");
    const double q = 0.25 * z * z;
    double term = 1.0;
    double total = 1.0;
    for (int n = 1; n <= kSeriesCap; ++n) {
        term *= q / (static_cast<double>(n) * (static_cast<double>(n) + order));
        total += term;
        if (!std::isfinite(total)) throw RangeError("bessel_j_mod overflow at z = " + std::to_string(z));
        if (term < kSeriesTol * total) return total;
    }
    // Large |z|: the series needs more terms than the cap; fall back to I_nu.
    const double az = std::abs(z);
    double value = 0.0;
    try {
        value = gamma_fn(order + 1.0) * std::pow(2.0 / az, order) *
                boost::math::cyl_bessel_i(order, az);
    } catch (const std::overflow_error&) {
        throw RangeError("bessel_j_mod overflow at z = " + std::to_string(z));
    }
    if (!std::isfinite(value)) throw RangeError("bessel_j_mod overflow at z = " + std::to_string(z));
    return value;
}

double bessel_j_mod(const DunklParams&, double order, double z) { return bessel_j_mod(order, z); }

double normalized_bessel_j(double nu, double t) {
    const double at = std::abs(t);
    if (at <= kAlternatingSeriesLimit) {
        const double q = -0.25 * at * at;
        double term = 1.0;
        double total = 1.0;
        for (int n = 1; n <= kSeriesCap; ++n) {
            term *= q / (static_cast<double>(n) * (static_cast<double>(n) + nu));
            total += term;
            if (std::abs(term) < kSeriesTol * std::abs(total)) break;
        }
        return total;
    }
    return gamma_fn(nu + 1.0) * std::pow(2.0 / at, nu) * boost::math::cyl_bessel_j(nu, at);
}

std::complex<double> dunkl_kernel(const DunklParams& params, double lambda, double x) {
    const double t = lambda * x;
    if (t == 0.0) return {1.0, 0.0};
    if (params.classical()) return {std::cos(t), std::sin(t)};
    const double a = params.alpha;
    const double even = normalized_bessel_j(a, t);
    const double odd = t / (2.0 * (a + 1.0)) * normalized_bessel_j(a + 1.0, t);
    return {even, odd};
}

}  // namespace dunkl
