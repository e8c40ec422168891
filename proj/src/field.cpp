#include "dunkl/field.hpp"

#include <algorithm>
#include <cmath>

namespace dunkl {

std::vector<double> ScalarField::radial_breaks() const {
    std::vector<double> out;
    for (double b : breakpoints) {
        if (b > 0.0) out.push_back(std::abs(b));
    }
    if (support_radius && *support_radius > 0.0) out.push_back(*support_radius);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ScalarField make_real_field(std::function<double(double)> f, Parity parity) {
    ScalarField out;
    out.real = std::move(f);
    out.parity = parity;
    return out;
}

ScalarField zero_field() {
    ScalarField out = make_real_field([](double) { return 0.0; }, Parity::even);
    out.support_radius = 0.0;
    return out;
}

ScalarField constant_field(double c) {
    ScalarField out = make_real_field([c](double) { return c; }, Parity::even);
    out.constant_value = c;
    return out;
}

ScalarField scaled(const ScalarField& f, double c) {
    ScalarField out = f;
    out.real = [g = f.real, c](double x) { return c * g(x); };
    if (f.imag) out.imag = [g = f.imag, c](double x) { return c * g(x); };
    if (f.constant_value) out.constant_value = c * *f.constant_value;
    return out;
}

ScalarField sum(const ScalarField& f, const ScalarField& g) {
    ScalarField out;
    out.real = [a = f.real, b = g.real](double x) { return a(x) + b(x); };
    if (f.imag || g.imag) {
        auto fi = f.imag, gi = g.imag;
        out.imag = [fi, gi](double x) { return (fi ? fi(x) : 0.0) + (gi ? gi(x) : 0.0); };
    }
    out.parity = f.parity == g.parity ? f.parity : Parity::none;
    if (f.support_radius && g.support_radius) {
        out.support_radius = std::max(*f.support_radius, *g.support_radius);
    }
    out.smoothness = (f.smoothness == Smoothness::smooth) ? g.smoothness : f.smoothness;
    out.breakpoints = f.breakpoints;
    out.breakpoints.insert(out.breakpoints.end(), g.breakpoints.begin(), g.breakpoints.end());
    out.origin_exponent = std::min(f.origin_exponent, g.origin_exponent);
    out.origin_log = f.origin_log || g.origin_log;
    if (f.constant_value && g.constant_value) out.constant_value = *f.constant_value + *g.constant_value;
    return out;
}

ScalarField abs_pow(const ScalarField& f, double p) {
    ScalarField out = f;
    if (f.is_real()) {
        out.real = [g = f.real, p](double x) { return std::pow(std::abs(g(x)), p); };
    } else {
        out.real = [g = f, p](double x) { return std::pow(std::abs(g(x)), p); };
    }
    out.imag = nullptr;
    if (f.parity != Parity::none) out.parity = Parity::even;
    out.origin_exponent = f.origin_exponent * p;
    if (f.constant_value) out.constant_value = std::pow(std::abs(*f.constant_value), p);
    return out;
}

ScalarField dilate(const ScalarField& f, int j) {
    const double s = std::ldexp(1.0, j);
    ScalarField out = f;
    out.real = [g = f.real, s](double x) { return g(s * x); };
    if (f.imag) out.imag = [g = f.imag, s](double x) { return g(s * x); };
    if (f.support_radius) out.support_radius = *f.support_radius / s;
    for (double& b : out.breakpoints) b /= s;
    return out;
}

ScalarField with_values(const ScalarField& f, std::function<double(double)> real,
                        std::function<double(double)> imag) {
    ScalarField out = f;
    out.real = std::move(real);
    out.imag = std::move(imag);
    out.constant_value.reset();
    return out;
}

}  // namespace dunkl
