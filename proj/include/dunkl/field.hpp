#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

enum class Parity { even, odd, none };
enum class Smoothness { smooth, piecewise, singular_at_origin };

/// A function of one real variable plus the metadata the integrators use to
/// place panels: parity, compact support, the radii |x| = b where the
/// function is not smooth, and the power behaviour |x|^e at the origin.
///
/// Real-valued fields leave `imag` empty.
struct ScalarField {
    std::function<double(double)> real;
    std::function<double(double)> imag;
    Parity parity = Parity::none;
    std::optional<double> support_radius;
    Smoothness smoothness = Smoothness::smooth;
    std::vector<double> breakpoints;
    double origin_exponent = 0.0;
    /// Extra log|x| factor at the origin.
    bool origin_log = false;
    /// Set when the field is known to be constant.
    std::optional<double> constant_value;

    bool is_real() const noexcept { return !imag; }
    std::complex<double> operator()(double x) const {
        return {real(x), imag ? imag(x) : 0.0};
    }
    double value(double x) const { return real(x); }

    /// Breakpoints plus the support radius, sorted and deduplicated.
    std::vector<double> radial_breaks() const;
};

ScalarField make_real_field(std::function<double(double)> f, Parity parity = Parity::none);
ScalarField zero_field();
ScalarField constant_field(double c);

/// x -> c f(x), metadata preserved.
ScalarField scaled(const ScalarField& f, double c);
/// x -> f(x) + g(x).
ScalarField sum(const ScalarField& f, const ScalarField& g);
/// x -> |f(x)|^p. Parity becomes even when f has a parity.
ScalarField abs_pow(const ScalarField& f, double p);
/// x -> f(2^j x).
ScalarField dilate(const ScalarField& f, int j);
/// A field with f's metadata but different values.
ScalarField with_values(const ScalarField& f, std::function<double(double)> real,
                        std::function<double(double)> imag = nullptr);

}  // namespace dunkl
