#include "dunkl/dunklops.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Geometry of z(u) = sqrt(x^2 + y^2 - 2 x y u) on u in [-1, 1].
struct Arc {
    double x;
    double y;

    // z^2 from the accurate distances omu = 1 - u, opu = 1 + u.
    double z2(double omu, double opu) const {
        const double xy = x * y;
        if (xy > 0.0) return (x - y) * (x - y) + 2.0 * xy * omu;
        return (x + y) * (x + y) - 2.0 * xy * opu;
    }
    double z(double omu, double opu) const { return std::sqrt(std::max(z2(omu, opu), 0.0)); }

    // u where z(u) = b, if inside (-1, 1). Crossings within rounding of an
    // end are dropped: there the jump sits at the endpoint itself.
    std::optional<double> crossing(double b) const {
        const double u = (x * x + y * y - b * b) / (2.0 * x * y);
        if (u > -1.0 + 1e-13 && u < 1.0 - 1e-13) return u;
        return std::nullopt;
    }

    double zmin() const { return std::abs(std::abs(x) - std::abs(y)); }

    // Geometric points toward the end where z is smallest, so that a sharp
    // peak of width ~ zmin^2 / |xy| in u is resolved.
    void grade(std::vector<Breakpoint>& pts) const {
        const double zm = zmin();
        if (zm == 0.0 || !(zm < 0.1 * std::max(std::abs(x), std::abs(y)))) return;
        const double eps = zm * zm / (2.0 * std::abs(x * y));
        const bool at_plus = x * y > 0.0;
        double d = eps;
        for (int k = 0; k < 40 && d < 1.0; ++k, d *= 4.0) {
            pts.emplace_back(at_plus ? 1.0 - d : -1.0 + d);
        }
    }
};

bool singular_origin(const ScalarField& f) {
    return f.origin_exponent < 0.0 || f.origin_log || f.smoothness == Smoothness::singular_at_origin;
}

double translate_real_impl(const DunklParams& params, const ScalarField& f, double x, double y,
                           const QuadSpec& spec) {
    if (params.classical()) return f.real(x + y);
    if (x == 0.0) return f.real(y);
    if (y == 0.0) return f.real(x);
    if (f.constant_value) return *f.constant_value;
    if (f.support_radius && std::abs(std::abs(x) - std::abs(y)) >= *f.support_radius) return 0.0;
    const double c = *params.c_alpha;
    const Arc arc{x, y};
    const double s = x + y;
    const auto& g = f.real;
    EndpointIntegrand<double> h;
    switch (f.parity) {
        case Parity::even:
            h = [&](double, double omu, double opu) { return c * g(arc.z(omu, opu)); };
            break;
        case Parity::odd:
            h = [&](double, double omu, double opu) {
                const double z = arc.z(omu, opu);
                return z == 0.0 ? 0.0 : c * s / z * g(z);
            };
            break;
        case Parity::none:
            h = [&](double, double omu, double opu) {
                const double z = arc.z(omu, opu);
                const double a = g(z);
                const double b = g(-z);
                return z == 0.0 ? c * a : 0.5 * c * ((a + b) + s / z * (a - b));
            };
            break;
    }
    std::vector<Breakpoint> pts;
    for (double b : f.radial_breaks()) {
        if (auto u = arc.crossing(b)) pts.emplace_back(*u);
    }
    Breakpoint plus{1.0};
    Breakpoint minus{-1.0};
    if (singular_origin(f)) {
        const double e = f.parity == Parity::even ? 0.5 * f.origin_exponent : 0.5 * (f.origin_exponent - 1.0);
        const Breakpoint sing{0.0, e, f.origin_log || f.smoothness == Smoothness::singular_at_origin};
        if (x == y) plus = sing;
        if (x == -y) minus = sing;
        arc.grade(pts);
    }
    auto r = integrate_jacobi_weight(params, h, pts, plus, minus, spec);
    if (!r.converged) throw AccuracyError("translate: quadrature did not converge", r.value, r.error);
    return r.value;
}

double kernel_at(const KernelSpec& k, double z) { return kernel_eval(k, z); }

struct KernelArc {
    std::vector<Breakpoint> points;
    Breakpoint plus{1.0};
    Breakpoint minus{-1.0};
};

KernelArc kernel_arc(const DunklParams& params, const KernelSpec& kernel, const Arc& arc) {
    KernelArc out;
    for (double k : kernel.kinks()) {
        if (auto u = arc.crossing(k)) out.points.emplace_back(*u);
    }
    const double e0 = kernel.origin_exponent();
    const bool lg = kernel.origin_log();
    if (e0 < 0.0 || lg) {
        const Breakpoint sing{0.0, 0.5 * e0, lg};
        if (arc.x == arc.y) out.plus = sing;
        if (arc.x == -arc.y) {
            const double total = 0.5 * e0 + params.alpha - 0.5;
            if (total <= -1.0) {
                throw DomainError("translated kernel is infinite at y = -x");
            }
            out.minus = sing;
        }
        arc.grade(out.points);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Transform

std::complex<double> transform_at(const DunklParams& params, const ScalarField& f, double lambda,
                                  const QuadSpec& spec) {
    if (!f.is_real()) {
        const ScalarField re = with_values(f, f.real);
        const ScalarField im = with_values(f, f.imag);
        return transform_at(params, re, lambda, spec) +
               std::complex<double>(0.0, 1.0) * transform_at(params, im, lambda, spec);
    }
    if (f.support_radius && *f.support_radius == 0.0) return 0.0;
    const double alpha = params.alpha;
    const double k1 = 1.0 / (2.0 * (alpha + 1.0));
    const auto& g = f.real;
    const SingularityHints hints;
    if (f.parity == Parity::even || lambda == 0.0) {
        ScalarField e = with_values(f, [&, lambda](double t) {
            return g(t) * normalized_bessel_j(alpha, lambda * t);
        });
        if (f.parity != Parity::even) {
            e.real = [&, lambda](double t) {
                return 0.5 * (g(t) + g(-t)) * normalized_bessel_j(alpha, lambda * t);
            };
        }
        e.parity = Parity::even;
        return integrate_mu_real(params, e, FullLine{}, hints, spec);
    }
    // Odd part pairs with the imaginary part of E(-i lambda x).
    ScalarField o = with_values(f, [&, lambda](double t) {
        const double s = lambda * t;
        const double odd = f.parity == Parity::odd ? g(t) : 0.5 * (g(t) - g(-t));
        return odd * s * k1 * normalized_bessel_j(alpha + 1.0, s);
    });
    o.parity = Parity::even;
    const double im = -integrate_mu_real(params, o, FullLine{}, hints, spec);
    if (f.parity == Parity::odd) return {0.0, im};
    ScalarField e = with_values(f, [&, lambda](double t) {
        return 0.5 * (g(t) + g(-t)) * normalized_bessel_j(alpha, lambda * t);
    });
    e.parity = Parity::even;
    const double re = integrate_mu_real(params, e, FullLine{}, hints, spec);
    return {re, im};
}

SampledSpectrum transform(const DunklParams& params, const ScalarField& f, const std::vector<double>& lambdas,
                          const QuadSpec& spec) {
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > lambdas[i - 1])) throw DomainError("transform: lambdas must be strictly increasing");
    }
    SampledSpectrum out;
    out.lambdas = lambdas;
    out.params = params;
    out.values.reserve(lambdas.size());
    for (double l : lambdas) out.values.push_back(transform_at(params, f, l, spec));
    return out;
}

ScalarField spectrum_field(const DunklParams& params, const ScalarField& f, const QuadSpec& spec) {
    struct Memo {
        std::mutex mutex;
        bool has = false;
        double lambda = 0.0;
        std::complex<double> value;
    };
    auto memo = std::make_shared<Memo>();
    auto eval = [params, f, spec, memo](double l) {
        {
            std::lock_guard lock(memo->mutex);
            if (memo->has && memo->lambda == l) return memo->value;
        }
        const auto v = transform_at(params, f, l, spec);
        std::lock_guard lock(memo->mutex);
        memo->has = true;
        memo->lambda = l;
        memo->value = v;
        return v;
    };
    ScalarField out;
    out.parity = f.parity;
    const bool real_valued = f.is_real() && f.parity == Parity::even;
    const bool imag_valued = f.is_real() && f.parity == Parity::odd;
    if (real_valued) {
        out.real = [eval](double l) { return eval(l).real(); };
    } else if (imag_valued) {
        out.real = [](double) { return 0.0; };
        out.imag = [eval](double l) { return eval(l).imag(); };
    } else {
        out.real = [eval](double l) { return eval(l).real(); };
        out.imag = [eval](double l) { return eval(l).imag(); };
    }
    return out;
}

std::vector<std::complex<double>> inverse_transform(const DunklParams& params, const ScalarField& g,
                                                    const std::vector<double>& xs, const QuadSpec& spec) {
    // int g(l) E(i l x) dmu(l) is the forward transform evaluated at -x.
    std::vector<std::complex<double>> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(transform_at(params, g, -x, spec));
    return out;
}

// ---------------------------------------------------------------------------
// Translation

double translate_real(const DunklParams& params, const ScalarField& f, double x, double y, const QuadSpec& spec) {
    return translate_real_impl(params, f, x, y, spec);
}

std::complex<double> translate(const DunklParams& params, const ScalarField& f, double x, double y,
                               const QuadSpec& spec) {
    const double re = translate_real_impl(params, f, x, y, spec);
    if (f.is_real()) return re;
    const ScalarField im = with_values(f, f.imag);
    return {re, translate_real_impl(params, im, x, y, spec)};
}

double translate_kernel(const DunklParams& params, const KernelSpec& kernel, double x, double y,
                        const QuadSpec& spec) {
    if (params.classical()) return kernel_at(kernel, x + y);
    if (x == 0.0) return kernel_at(kernel, y);
    if (y == 0.0) return kernel_at(kernel, x);
    const double c = *params.c_alpha;
    const Arc arc{x, y};
    const KernelArc ka = kernel_arc(params, kernel, arc);
    const EndpointIntegrand<double> h = [&](double, double omu, double opu) {
        const double z = arc.z(omu, opu);
        return z == 0.0 ? 0.0 : c * kernel_at(kernel, z);
    };
    auto r = integrate_jacobi_weight(params, h, ka.points, ka.plus, ka.minus, spec);
    if (!r.converged) throw AccuracyError("translate_kernel: quadrature did not converge", r.value, r.error);
    return r.value;
}

double translate_kernel_difference(const DunklParams& params, const KernelSpec& kernel, double x, double y,
                                   const QuadSpec& spec) {
    if (y == 0.0) throw DomainError("translate_kernel_difference needs y != 0");
    const double ky = kernel_at(kernel, y);
    if (params.classical()) return kernel_at(kernel, x + y) - ky;
    if (x == 0.0) return 0.0;
    const double c = *params.c_alpha;
    const Arc arc{x, y};
    const KernelArc ka = kernel_arc(params, kernel, arc);
    const EndpointIntegrand<double> h = [&](double, double omu, double opu) {
        const double z = arc.z(omu, opu);
        return z == 0.0 ? 0.0 : c * (kernel_at(kernel, z) - ky);
    };
    auto r = integrate_jacobi_weight(params, h, ka.points, ka.plus, ka.minus, spec);
    if (!r.converged) {
        throw AccuracyError("translate_kernel_difference: quadrature did not converge", r.value, r.error);
    }
    return r.value;
}

std::vector<Breakpoint> translation_breakpoints(const DunklParams& params, const ScalarField& f, double x) {
    const double ax = std::abs(x);
    std::vector<Breakpoint> out;
    for (double b : f.radial_breaks()) {
        if (std::abs(ax - b) > 0.0) out.emplace_back(std::abs(ax - b));
        if (ax > 0.0) out.emplace_back(ax + b);
    }
    if (ax > 0.0 && singular_origin(f)) {
        const double e = f.origin_exponent + params.weight_exponent();
        const bool integer = e >= 0.0 && e == std::round(e);
        out.emplace_back(ax, e, f.origin_log || integer);
    }
    std::sort(out.begin(), out.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.pos < b.pos; });
    return out;
}

ScalarField translated_field(const DunklParams& params, const ScalarField& f, double x, const QuadSpec& spec) {
    ScalarField out;
    out.real = [params, f, x, spec](double y) { return translate_real_impl(params, f, x, y, spec); };
    if (f.imag) {
        const ScalarField im = with_values(f, f.imag);
        out.imag = [params, im, x, spec](double y) { return translate_real_impl(params, im, x, y, spec); };
    }
    out.parity = x == 0.0 ? f.parity : Parity::none;
    if (f.support_radius) out.support_radius = std::abs(x) + *f.support_radius;
    out.smoothness = Smoothness::piecewise;
    for (const auto& b : translation_breakpoints(params, f, x)) out.breakpoints.push_back(b.pos);
    if (x == 0.0) {
        out.origin_exponent = f.origin_exponent;
        out.origin_log = f.origin_log;
        out.smoothness = f.smoothness;
    }
    if (f.constant_value) out.constant_value = f.constant_value;
    return out;
}

// ---------------------------------------------------------------------------
// Convolution

double convolve_real(const DunklParams& params, const ScalarField& f, const ScalarField& g, double x,
                     const QuadSpec& spec) {
    if (!f.is_real() || !g.is_real()) throw DomainError("convolve_real needs real fields");
    if ((f.support_radius && *f.support_radius == 0.0) || (g.support_radius && *g.support_radius == 0.0)) {
        return 0.0;
    }
    const double A = params.A_alpha;
    const double w = params.weight_exponent();
    const QuadSpec inner = spec.tightened(10.0);
    const std::function<double(double)> radial = [&](double t) {
        double v = 0.0;
        const double fp = f.real(t);
        const double fm = f.real(-t);
        if (fp != 0.0) v += fp * translate_real_impl(params, g, x, -t, inner);
        if (fm != 0.0) v += fm * translate_real_impl(params, g, x, t, inner);
        return v * A * std::pow(t, w);
    };
    std::vector<Breakpoint> pts = translation_breakpoints(params, g, x);
    for (double b : f.radial_breaks()) pts.emplace_back(b);
    double e0 = f.origin_exponent + w;
    bool lg = f.origin_log;
    if (x == 0.0) {
        e0 += g.origin_exponent;
        lg = lg || g.origin_log;
    }
    pts.emplace_back(0.0, e0, lg);
    double hi = kInf;
    if (f.support_radius) hi = *f.support_radius;
    if (g.support_radius) hi = std::min(hi, std::abs(x) + *g.support_radius);
    std::vector<Breakpoint> kept;
    for (const auto& p : pts) {
        if (p.pos == 0.0 || p.pos < hi) kept.push_back(p);
    }
    return integrate_radial(radial, 0.0, hi, kept, spec);
}

std::complex<double> convolve(const DunklParams& params, const ScalarField& f, const ScalarField& g, double x,
                              const QuadSpec& spec) {
    const ScalarField fr = with_values(f, f.real);
    const ScalarField gr = with_values(g, g.real);
    std::complex<double> out = convolve_real(params, fr, gr, x, spec);
    if (f.imag) {
        const ScalarField fi = with_values(f, f.imag);
        out += std::complex<double>(0.0, convolve_real(params, fi, gr, x, spec));
        if (g.imag) out -= convolve_real(params, fi, with_values(g, g.imag), x, spec);
    }
    if (g.imag) out += std::complex<double>(0.0, convolve_real(params, fr, with_values(g, g.imag), x, spec));
    return out;
}

}  // namespace dunkl
