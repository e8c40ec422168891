#include "dunkl/operators.hpp"

#include "dunkl/dunklops.hpp"
#include "dunkl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_zero(const ScalarField& f) {
    return (f.constant_value && *f.constant_value == 0.0) || (f.support_radius && *f.support_radius <= 0.0);
}

Breakpoint singular_point(double pos, double exponent, bool log) {
    const bool integer = exponent >= 0.0 && exponent == std::round(exponent);
    return {pos, exponent, log || integer};
}

/// Keeps points in [lo, hi] (end points describe the end behaviour), merging duplicates in favour of the singular one.
std::vector<Breakpoint> clip(std::vector<Breakpoint> pts, double lo, double hi) {
    std::vector<Breakpoint> out;
    std::sort(pts.begin(), pts.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.pos < b.pos; });
    for (const auto& p : pts) {
        if (p.pos < lo || p.pos > hi) continue;
        if (p.pos != lo && p.pos == 0.0) continue;
        if (!out.empty() && std::abs(out.back().pos - p.pos) <= 1e-14 * std::max(1.0, p.pos)) {
            if (p.exponent != 0.0 || p.log) out.back() = p;
            continue;
        }
        out.push_back(p);
    }
    return out;
}

/// Points of y -> f(y) tau_x K(y) on the radial axis.
std::vector<Breakpoint> outer_points(const DunklParams& params, const KernelSpec& kernel, const ScalarField& f,
                                     double x) {
    const double ax = std::abs(x);
    const double w = params.weight_exponent();
    const double e0 = kernel.origin_exponent();
    const bool klog = kernel.origin_log();
    std::vector<Breakpoint> pts;
    for (double b : f.radial_breaks()) pts.emplace_back(b);
    for (double k : kernel.kinks()) {
        if (std::abs(ax - k) > 0.0) pts.emplace_back(std::abs(ax - k));
        if (ax > 0.0) pts.emplace_back(ax + k);
    }
    if (ax == 0.0) {
        pts.emplace_back(0.0, f.origin_exponent + e0 + w, f.origin_log || klog);
    } else {
        pts.emplace_back(0.0, f.origin_exponent + w, f.origin_log);
        if (e0 < 0.0 || klog) {
            pts.push_back(singular_point(ax, e0 + w, klog));
        } else {
            pts.emplace_back(ax);
        }
    }
    return pts;
}

/// tau_x K at y, zero at the (measure-zero) points where it is infinite.
double tk(const DunklParams& params, const KernelSpec& kernel, double x, double y, const QuadSpec& inner) {
    if (y == 0.0 && x == 0.0) return 0.0;
    if (x != 0.0 && std::abs(y) == std::abs(x) && (kernel.origin_exponent() < 0.0 || kernel.origin_log())) {
        return 0.0;
    }
    return translate_kernel(params, kernel, x, y, inner);
}

double radial_apply(const DunklParams& params, const ScalarField& f, const std::vector<Breakpoint>& all_points,
                    double lo, double hi, const std::function<double(double)>& kernel_part, const QuadSpec& quad) {
    if (!(hi > lo)) return 0.0;
    const double A = params.A_alpha;
    const double w = params.weight_exponent();
    const bool even = f.parity == Parity::even;
    const std::function<double(double)> g = [&](double t) {
        if (t <= 0.0) return 0.0;
        double v = 0.0;
        const double fp = f.real(t);
        if (even) {
            if (fp != 0.0) v = fp * (kernel_part(t) + kernel_part(-t));
        } else {
            const double fm = f.real(-t);
            if (fp != 0.0) v += fp * kernel_part(t);
            if (fm != 0.0) v += fm * kernel_part(-t);
        }
        return v * A * std::pow(t, w);
    };
    return integrate_radial(g, lo, hi, clip(all_points, lo, hi), quad);
}

}  // namespace

// ---------------------------------------------------------------------------
// Maximal function

std::vector<double> maximal_radii(const SupGrid& grid, double x) {
    std::vector<double> radii = grid.radii();
    const double target = 4.0 * (std::abs(x) + 1.0);
    const double step = std::exp2(1.0 / grid.points_per_octave);
    while (radii.back() < target) radii.push_back(radii.back() * step);
    return radii;
}

std::vector<double> maximal_values(const DunklParams& params, const ScalarField& f, const std::vector<double>& xs,
                                   const SupGrid& grid, const QuadSpec& quad) {
    grid.validate();
    if (f.constant_value) return std::vector<double>(xs.size(), std::abs(*f.constant_value));
    double reach = 0.0;
    for (double x : xs) reach = std::max(reach, std::abs(x) + maximal_radii(grid, x).back());
    const auto table = CumulativeTable::build(params, abs_pow(f, 1.0), reach, quad);
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        double best = 0.0;
        for (double r : maximal_radii(grid, x)) {
            const double avg = ball_integral(params, table, x, r, quad) / measure_ball(params, Ball{0.0, r});
            best = std::max(best, avg);
        }
        out.push_back(best);
    }
    return out;
}

double maximal(const DunklParams& params, const ScalarField& f, double x, const SupGrid& grid,
               const QuadSpec& quad) {
    return maximal_values(params, f, {x}, grid, quad).front();
}

std::vector<double> operator_nodes(bool even, const std::vector<double>& extra) {
    std::vector<double> pos = log_nodes(std::exp2(-10.0), std::exp2(12.0), 4, extra);
    if (even) return pos;
    std::vector<double> out;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
        if (*it > 0.0) out.push_back(-*it);
    }
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

TabulatedField maximal_field(const DunklParams& params, const ScalarField& f, const SupGrid& grid,
                             const QuadSpec& quad) {
    const bool even = f.parity != Parity::none;
    auto nodes = operator_nodes(even, f.radial_breaks());
    auto values = maximal_values(params, f, nodes, grid, quad);
    return TabulatedField::from_values(std::move(nodes), std::move(values), even ? Parity::even : Parity::none);
}

// ---------------------------------------------------------------------------
// Kernel operators

double kernel_apply(const DunklParams& params, const KernelSpec& kernel, const ScalarField& f, double x,
                    const QuadSpec& quad) {
    if (is_zero(f)) return 0.0;
    const QuadSpec inner = quad.tightened(10.0);
    const double hi = f.support_radius ? *f.support_radius : kInf;
    const auto part = [&](double y) { return tk(params, kernel, x, y, inner); };
    return radial_apply(params, f, outer_points(params, kernel, f, x), 0.0, hi, part, quad);
}

double kernel_apply_adjoint(const DunklParams& params, const KernelSpec& kernel, const ScalarField& f, double x,
                            const QuadSpec& quad) {
    if (is_zero(f)) return 0.0;
    const QuadSpec inner = quad.tightened(10.0);
    const double A = params.A_alpha;
    const double w = params.weight_exponent();
    const double e0 = kernel.origin_exponent();
    const std::function<double(double)> g = [&](double t) {
        if (t <= 0.0) return 0.0;
        const double k = kernel_eval(kernel, t);
        const double v = translate_real(params, f, -x, t, inner) + translate_real(params, f, -x, -t, inner);
        return v * k * A * std::pow(t, w);
    };
    std::vector<Breakpoint> pts = translation_breakpoints(params, f, x);
    for (double k : kernel.kinks()) pts.emplace_back(k);
    double origin = e0 + w;
    bool lg = kernel.origin_log();
    if (x == 0.0) {
        origin += f.origin_exponent;
        lg = lg || f.origin_log;
        for (double b : f.radial_breaks()) pts.emplace_back(b);
    }
    pts.emplace_back(0.0, origin, lg);
    const double hi = f.support_radius ? std::abs(x) + *f.support_radius : kInf;
    return integrate_radial(g, 0.0, hi, clip(pts, 0.0, hi), quad);
}

double bessel_riesz_apply(const DunklParams& params, double beta, double gamma, const ScalarField& f, double x,
                          const QuadSpec& quad) {
    return kernel_apply(params, KernelSpec::bessel_riesz(params, beta, gamma), f, x, quad);
}

double generalized_bessel_riesz_apply(const DunklParams& params, const GrowthFunction& rho_tilde, double gamma,
                                      const ScalarField& f, double x, const QuadSpec& quad,
                                      std::vector<std::string>* warnings) {
    if (warnings) {
        ConditionInputs in;
        in.rho_tilde = rho_tilde;
        in.gamma = gamma;
        const auto rep = check_condition("eq35", in, params);
        if (!rep.holds) warnings->push_back("eq35 does not hold for " + rho_tilde.descriptor());
    }
    return kernel_apply(params, KernelSpec::generalized(params, rho_tilde, gamma), f, x, quad);
}

double fractional_apply(const DunklParams& params, const GrowthFunction& rho, const ScalarField& f, double x,
                        const QuadSpec& quad, std::vector<std::string>* warnings) {
    if (warnings) {
        ConditionInputs in;
        in.rho = rho;
        const auto rep = check_condition("eq39", in, params);
        if (!rep.holds) warnings->push_back("eq39 does not hold for " + rho.descriptor());
    }
    return kernel_apply(params, KernelSpec::riesz_type(params, rho), f, x, quad);
}

double modified_fractional_apply(const DunklParams& params, const GrowthFunction& rho, const ScalarField& f,
                                 double x, const QuadSpec& quad) {
    if (is_zero(f)) return 0.0;
    const KernelSpec kernel = KernelSpec::riesz_type(params, rho);
    const QuadSpec inner = quad.tightened(10.0);
    const double hi = f.support_radius ? *f.support_radius : kInf;
    auto pts = outer_points(params, kernel, f, x);
    pts.emplace_back(1.0);
    const auto near = [&](double y) { return tk(params, kernel, x, y, inner); };
    const auto far = [&](double y) {
        if (x != 0.0 && std::abs(y) == std::abs(x)) return 0.0;
        return translate_kernel_difference(params, kernel, x, y, inner);
    };
    const double inside = radial_apply(params, f, pts, 0.0, std::min(1.0, hi), near, quad);
    if (x == 0.0 || !(hi > 1.0)) return inside;
    std::vector<Breakpoint> outer;
    for (const auto& p : pts) {
        if (p.pos >= 1.0) outer.push_back(p);
    }
    if (!outer.empty() && outer.front().pos == 1.0 && outer.front().exponent == 0.0 && !outer.front().log) {
        outer.erase(outer.begin());
    }
    return inside + radial_apply(params, f, outer, 1.0, hi, far, quad);
}

}  // namespace dunkl
