#include "dunkl/norms.hpp"

#include "dunkl/dunklops.hpp"
#include "dunkl/errors.hpp"

#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/interpolators/pchip.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kChebNodes = 16;
constexpr int kCumulativePerOctave = 4;
constexpr int kCumulativeOctaves = 40;
constexpr int kOscillationNodes = 10;

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || std::abs(x - out.back()) > 1e-12 * std::max(std::abs(x), 1e-300)) out.push_back(x);
    }
    v = std::move(out);
}

double clenshaw(const std::vector<double>& c, double s) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) {
        const double t = 2.0 * s * b1 - b2 + c[j];
        b2 = b1;
        b1 = t;
    }
    return s * b1 - b2 + c[0];
}

}  // namespace

// ---------------------------------------------------------------------------
// NormResult

std::string to_json(const NormResult& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    j["arg_r"] = r.arg_r;
    j["arg_x"] = r.arg_x;
    j["grid"] = {{"r_min", r.grid.r_min},
                 {"r_max", r.grid.r_max},
                 {"points_per_octave", r.grid.points_per_octave},
                 {"x_min", r.grid.x_min},
                 {"x_max", r.grid.x_max},
                 {"x_points", r.grid.x_points}};
    j["lower_bound"] = r.is_lower_bound;
    return j.dump();
}

// ---------------------------------------------------------------------------
// TabulatedField

struct TabulatedField::Impl {
    std::vector<double> nodes;
    std::vector<double> values;
    Parity parity = Parity::even;
    Tail tail = Tail::power_law;
    std::optional<boost::math::interpolators::pchip<std::vector<double>>> spline;

    double extrapolate(double z, std::size_t last, std::size_t prev) const {
        const double zn = nodes[last];
        const double vn = values[last];
        if (tail == Tail::constant || vn == 0.0) return vn;
        const double zp = nodes[prev];
        const double vp = values[prev];
        if (zn * zp <= 0.0 || vn * vp <= 0.0) return vn;
        const double s = std::log(vn / vp) / std::log(zn / zp);
        return vn * std::pow(z / zn, s);
    }

    double eval(double x) const {
        const double z = parity == Parity::even ? std::abs(x) : x;
        const std::size_t n = nodes.size();
        if (z > nodes.back()) return extrapolate(z, n - 1, n - 2);
        if (z < nodes.front()) return extrapolate(z, 0, 1);
        return (*spline)(z);
    }
};

TabulatedField TabulatedField::from_values(std::vector<double> nodes, std::vector<double> values, Parity parity,
                                           Tail tail) {
    if (nodes.size() != values.size()) throw DomainError("tabulated field: node and value counts differ");
    if (nodes.size() < 4) throw DomainError("tabulated field: needs at least four nodes");
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i] > nodes[i - 1])) throw DomainError("tabulated field: nodes must increase");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw DomainError("tabulated field: non-finite sample");
    }
    auto impl = std::make_shared<Impl>();
    impl->nodes = nodes;
    impl->values = values;
    impl->parity = parity == Parity::even ? Parity::even : Parity::none;
    impl->tail = tail;
    impl->spline.emplace(std::move(nodes), std::move(values));
    TabulatedField out;
    out.parity_ = impl->parity;
    out.impl_ = std::move(impl);
    return out;
}

TabulatedField TabulatedField::sample(const std::function<double(double)>& g, std::vector<double> nodes,
                                      Parity parity, Tail tail) {
    if (parity == Parity::even) {
        nodes.erase(std::remove_if(nodes.begin(), nodes.end(), [](double z) { return z < 0.0; }), nodes.end());
    }
    sort_unique(nodes);
    std::vector<double> values;
    values.reserve(nodes.size());
    for (double z : nodes) values.push_back(g(z));
    return from_values(std::move(nodes), std::move(values), parity, tail);
}

double TabulatedField::operator()(double x) const { return impl_->eval(x); }
const std::vector<double>& TabulatedField::nodes() const { return impl_->nodes; }
const std::vector<double>& TabulatedField::values() const { return impl_->values; }

ScalarField TabulatedField::field() const {
    ScalarField out;
    auto impl = impl_;
    out.real = [impl](double x) { return impl->eval(x); };
    out.parity = parity_;
    out.smoothness = Smoothness::piecewise;
    return out;
}

std::vector<double> log_nodes(double lo, double hi, int ppo, const std::vector<double>& extra) {
    if (!(lo > 0.0) || !(hi > lo) || ppo < 1) throw DomainError("log_nodes: need 0 < lo < hi and ppo >= 1");
    std::vector<double> out{0.0};
    const int n = static_cast<int>(std::ceil(std::log2(hi / lo) * ppo - 1e-9));
    for (int k = 0; k <= n; ++k) out.push_back(std::min(hi, lo * std::exp2(static_cast<double>(k) / ppo)));
    out.insert(out.end(), extra.begin(), extra.end());
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------------------
// CumulativeTable

double CumulativeTable::Side::eval(double z) const {
    if (z <= 0.0 || nodes.size() < 2) return 0.0;
    const std::size_t n = nodes.size() - 1;
    if (z < nodes[1]) return H[1] * std::pow(z / nodes[1], first_power);
    if (z >= nodes[n]) {
        if (tail_zero || z == nodes[n]) return H[n];
        const double zn = nodes[n];
        const double e = tail_slope + 1.0;
        if (std::abs(e) < 1e-12) return H[n] + tail_density * zn * std::log(z / zn);
        return H[n] + tail_density * zn * (std::pow(z / zn, e) - 1.0) / e;
    }
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), z);
    const std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
    const double mid = 0.5 * (nodes[i] + nodes[i + 1]);
    const double half = 0.5 * (nodes[i + 1] - nodes[i]);
    const double s = std::clamp((z - mid) / half, -1.0, 1.0);
    return H[i] + half * clenshaw(cheb[i], s) + correction[i] * 0.5 * (s + 1.0);
}

double CumulativeTable::Side::total() const {
    if (nodes.size() < 2) return 0.0;
    const double hn = H.back();
    if (tail_zero) return hn;
    if (tail_slope < -1.0) return hn - tail_density * nodes.back() / (tail_slope + 1.0);
    return tail_density > 0.0 ? kInf : -kInf;
}

CumulativeTable::Side CumulativeTable::build_side(const DunklParams& params,
                                                  const std::function<double(double)>& density,
                                                  double origin_exponent, bool origin_log,
                                                  std::vector<double> nodes, bool zero_beyond,
                                                  const QuadSpec& quad) {
    (void)params;
    Side side;
    side.nodes = std::move(nodes);
    const std::size_t n = side.nodes.size() - 1;
    side.H.assign(n + 1, 0.0);
    side.cheb.assign(n, {});
    side.correction.assign(n, 0.0);
    side.first_power = origin_exponent + 1.0;
    const EndpointIntegrand<double> dens = [&](double t, double, double) { return t == 0.0 ? 0.0 : density(t); };
    {
        auto r = integrate_adaptive(dens, 0.0, side.nodes[1], {Breakpoint{0.0, origin_exponent, origin_log}}, quad);
        side.H[1] = r.value;
    }
    const double pi = std::numbers::pi;
    for (std::size_t i = 1; i < n; ++i) {
        const double a = side.nodes[i];
        const double b = side.nodes[i + 1];
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        std::vector<double> fv(kChebNodes);
        for (int k = 0; k < kChebNodes; ++k) {
            fv[static_cast<std::size_t>(k)] = density(mid + half * std::cos(pi * (k + 0.5) / kChebNodes));
        }
        std::vector<double> coef(kChebNodes + 2, 0.0);
        for (int j = 0; j < kChebNodes; ++j) {
            double s = 0.0;
            for (int k = 0; k < kChebNodes; ++k) s += fv[static_cast<std::size_t>(k)] * std::cos(pi * j * (k + 0.5) / kChebNodes);
            coef[static_cast<std::size_t>(j)] = (j == 0 ? 1.0 : 2.0) * s / kChebNodes;
        }
        std::vector<double> anti(kChebNodes + 1, 0.0);
        anti[1] = coef[0] - 0.5 * coef[2];
        for (int j = 2; j <= kChebNodes; ++j) {
            anti[static_cast<std::size_t>(j)] = (coef[static_cast<std::size_t>(j - 1)] - coef[static_cast<std::size_t>(j + 1)]) / (2.0 * j);
        }
        double at_minus = 0.0;
        for (int j = 1; j <= kChebNodes; ++j) at_minus += anti[static_cast<std::size_t>(j)] * (j % 2 == 0 ? 1.0 : -1.0);
        anti[0] = -at_minus;
        const double approx = half * clenshaw(anti, 1.0);
        auto r = integrate_adaptive(dens, a, b, {}, quad);
        side.cheb[i] = std::move(anti);
        side.correction[i] = r.value - approx;
        side.H[i + 1] = side.H[i] + r.value;
    }
    side.tail_zero = zero_beyond;
    if (!zero_beyond && n >= 2) {
        const double zn = side.nodes[n];
        const double zp = side.nodes[n - 1];
        const double gn = density(zn);
        const double gp = density(zp);
        if (gn == 0.0 || gn * gp <= 0.0 || !std::isfinite(gn) || !std::isfinite(gp)) {
            side.tail_zero = true;
        } else {
            side.tail_density = gn;
            side.tail_slope = std::log(gn / gp) / std::log(zn / zp);
        }
    }
    return side;
}

CumulativeTable CumulativeTable::constant(const DunklParams& params, double c) {
    CumulativeTable t;
    t.params_ = params;
    t.constant_ = c;
    return t;
}

CumulativeTable CumulativeTable::build(const DunklParams& params, const ScalarField& h, double z_max,
                                       const QuadSpec& quad, const std::vector<double>& extra_nodes) {
    if (h.constant_value) return constant(params, *h.constant_value);
    if (!(z_max > 0.0)) throw DomainError("cumulative table: z_max must be positive");
    CumulativeTable t;
    t.params_ = params;
    t.even_ = h.parity == Parity::even;
    double top = z_max;
    bool zero_beyond = false;
    if (h.support_radius) {
        if (*h.support_radius <= 0.0) {
            t.constant_ = 0.0;
            return t;
        }
        if (*h.support_radius <= z_max) {
            top = *h.support_radius;
            zero_beyond = true;
        }
    }
    t.breaks_ = h.radial_breaks();
    std::vector<double> extra;
    for (double b : t.breaks_) {
        if (b < top) extra.push_back(b);
    }
    for (double e : extra_nodes) {
        if (std::abs(e) > 0.0 && std::abs(e) < top) extra.push_back(std::abs(e));
    }
    const double lo = top * std::exp2(-kCumulativeOctaves);
    std::vector<double> nodes = log_nodes(lo, top, kCumulativePerOctave, extra);
    const double A = params.A_alpha;
    const double w = params.weight_exponent();
    const double e0 = h.origin_exponent + w;
    const auto& g = h.real;
    t.pos_ = build_side(params, [&](double s) { return g(s) * A * std::pow(s, w); }, e0, h.origin_log, nodes,
                        zero_beyond, quad);
    if (!t.even_) {
        t.neg_ = build_side(params, [&](double s) { return g(-s) * A * std::pow(s, w); }, e0, h.origin_log, nodes,
                            zero_beyond, quad);
    }
    return t;
}

double CumulativeTable::operator()(double z) const {
    if (constant_) {
        return *constant_ * params_.b_alpha * std::copysign(std::pow(std::abs(z), params_.d_alpha), z);
    }
    if (z >= 0.0) return pos_.eval(z);
    return -(even_ ? pos_ : neg_).eval(-z);
}

double CumulativeTable::total() const {
    if (constant_) return *constant_ == 0.0 ? 0.0 : std::copysign(kInf, *constant_);
    return pos_.total() + (even_ ? pos_ : neg_).total();
}

// ---------------------------------------------------------------------------
// Ball integrals

double ball_integral_swapped(const DunklParams& params, const std::function<double(double)>& H,
                             const std::vector<double>& breaks, double x, double r, const QuadSpec& quad) {
    if (!(r > 0.0)) throw DomainError("ball radius must be positive");
    if (x == 0.0) return H(r) - H(-r);
    if (params.classical()) return H(x + r) - H(x - r);
    const double c = *params.c_alpha;
    const double r2 = r * r;
    const double x2 = x * x;
    const EndpointIntegrand<double> h = [&](double u, double omu, double opu) {
        const double D = r2 - x2 * omu * opu;
        if (D <= 0.0) return 0.0;
        const double sq = std::sqrt(D);
        return H(-x * u + sq) - H(-x * u - sq);
    };
    std::vector<Breakpoint> pts;
    for (double b : breaks) {
        if (!(b > 0.0)) continue;
        const double u = (r2 - x2 - b * b) / (2.0 * x * b);
        if (u > -1.0 && u < 1.0) {
            pts.emplace_back(u);
            pts.emplace_back(-u);
        }
    }
    const double ax = std::abs(x);
    if (ax > r) {
        const double uc = std::sqrt((ax - r) * (ax + r)) / ax;
        pts.emplace_back(uc, 0.5);
        pts.emplace_back(-uc, 0.5);
    } else if (ax == r) {
        pts.emplace_back(0.0);
    }
    auto res = integrate_jacobi_weight(params, h, pts, Breakpoint{1.0}, Breakpoint{-1.0}, quad);
    if (!res.converged) throw AccuracyError("ball integral did not converge", c * res.value, c * res.error);
    return c * res.value;
}

double ball_integral(const DunklParams& params, const CumulativeTable& table, double x, double r,
                     const QuadSpec& quad) {
    if (!(r > 0.0)) throw DomainError("ball radius must be positive");
    if (table.is_constant()) return *table.constant_value() * measure_ball(params, Ball{0.0, r});
    return ball_integral_swapped(params, [&table](double z) { return table(z); }, table.breaks(), x, r, quad);
}

double ball_integral_direct(const DunklParams& params, const ScalarField& h, double x, double r,
                            const QuadSpec& quad) {
    if (!(r > 0.0)) throw DomainError("ball radius must be positive");
    if (h.constant_value) return *h.constant_value * measure_ball(params, Ball{0.0, r});
    const ScalarField g = translated_field(params, h, x, quad.tightened(10.0));
    SingularityHints hints;
    if (x != 0.0) {
        hints.origin_exponent = params.weight_exponent();
        hints.interior_points = translation_breakpoints(params, h, x);
    }
    return integrate_mu_real(params, g, Ball{0.0, r}, hints, quad);
}

double grid_reach(const SupGrid& grid) {
    return std::max(std::abs(grid.x_min), std::abs(grid.x_max)) + grid.r_max;
}

CumulativeTable kernel_power_table(const KernelSpec& kernel, double s, const SupGrid& grid, const QuadSpec& quad) {
    ScalarField h;
    h.real = [kernel, s](double t) { return t == 0.0 ? 0.0 : std::pow(kernel(t), s); };
    h.parity = Parity::even;
    h.origin_exponent = s * kernel.origin_exponent();
    h.origin_log = kernel.origin_log();
    h.breakpoints = kernel.kinks();
    h.smoothness = h.origin_exponent < 0.0 ? Smoothness::singular_at_origin : Smoothness::smooth;
    return CumulativeTable::build(kernel.params, h, grid_reach(grid), quad);
}

BallGrid ball_grid(const DunklParams& params, const CumulativeTable& table, const SupGrid& grid,
                   const QuadSpec& quad) {
    BallGrid out;
    out.radii = grid.radii();
    out.xs = table.even() || table.is_constant() ? grid.xs_nonnegative() : grid.xs();
    out.values.reserve(out.radii.size() * out.xs.size());
    for (double r : out.radii) {
        for (double x : out.xs) out.values.push_back(ball_integral(params, table, x, r, quad));
    }
    return out;
}

namespace {

template <class Weight>
NormResult sup_over(const BallGrid& balls, const SupGrid& grid, Weight&& weight) {
    NormResult res;
    res.grid = grid;
    bool first = true;
    for (std::size_t i = 0; i < balls.radii.size(); ++i) {
        for (std::size_t j = 0; j < balls.xs.size(); ++j) {
            const double v = weight(balls.radii[i], std::max(balls.at(i, j), 0.0));
            if (first || v > res.value) {
                res.value = v;
                res.arg_r = balls.radii[i];
                res.arg_x = balls.xs[j];
                first = false;
            }
        }
    }
    return res;
}

}  // namespace

NormResult generalized_morrey_from_grid(const DunklParams& params, const BallGrid& balls, double p,
                                        const GrowthFunction& phi, const SupGrid& grid) {
    const double d = params.d_alpha;
    return sup_over(balls, grid, [&](double r, double q) {
        return std::pow(std::pow(r, -d) * q, 1.0 / p) / phi(r);
    });
}

NormResult morrey_from_grid(const DunklParams& params, const BallGrid& balls, double p, double q,
                            const SupGrid& grid) {
    const double d = params.d_alpha;
    return sup_over(balls, grid, [&](double r, double v) {
        return std::pow(r, d * (1.0 / q - 1.0 / p)) * std::pow(v, 1.0 / p);
    });
}

double lp_norm(const DunklParams& params, const ScalarField& f, double p, const QuadSpec& quad) {
    if (std::isinf(p) && p > 0.0) {
        double best = 0.0;
        for (int i = 0; i <= 8192; ++i) {
            const double x = -64.0 + 128.0 * i / 8192.0;
            if (x == 0.0 && (f.origin_exponent < 0.0 || f.origin_log)) continue;
            best = std::max(best, std::abs(f(x)));
        }
        return best;
    }
    if (!(p >= 1.0)) throw DomainError("lp_norm needs p >= 1");
    if (f.constant_value) {
        if (*f.constant_value == 0.0) return 0.0;
        throw DomainError("lp_norm: a nonzero constant is not p-integrable");
    }
    const ScalarField h = abs_pow(f, p);
    const double v = integrate_mu_real(params, h, FullLine{}, {}, quad);
    return std::pow(std::max(v, 0.0), 1.0 / p);
}

NormResult morrey_norm(const DunklParams& params, const ScalarField& f, double p, double q, const SupGrid& grid,
                       const QuadSpec& quad) {
    if (!(p >= 1.0 && q >= p)) throw DomainError("morrey_norm needs 1 <= p <= q");
    const auto table = CumulativeTable::build(params, abs_pow(f, p), grid_reach(grid), quad);
    return morrey_from_grid(params, ball_grid(params, table, grid, quad), p, q, grid);
}

NormResult generalized_morrey_norm(const DunklParams& params, const ScalarField& f, double p,
                                   const GrowthFunction& phi, const SupGrid& grid, const QuadSpec& quad) {
    if (!(p >= 1.0)) throw DomainError("generalized_morrey_norm needs p >= 1");
    const auto table = CumulativeTable::build(params, abs_pow(f, p), grid_reach(grid), quad);
    return generalized_morrey_from_grid(params, ball_grid(params, table, grid, quad), p, phi, grid);
}

double ball_mean(const DunklParams& params, const ScalarField& f, double x, double r, const QuadSpec& quad) {
    if (f.constant_value) return *f.constant_value;
    return ball_integral_direct(params, f, x, r, quad) / measure_ball(params, Ball{0.0, r});
}

// ---------------------------------------------------------------------------
// Mean oscillation

namespace {

struct Interval {
    double a;
    double b;
    std::vector<double> t;   // GL nodes in (a, b), ascending
    std::vector<double> w;   // GL weight times the measure density
    std::vector<double> g;   // function values
};

double lagrange(const std::vector<double>& t, const std::vector<double>& g, double s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        double l = 1.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (j != i) l *= (s - t[j]) / (t[i] - t[j]);
        }
        sum += l * g[i];
    }
    return sum;
}

// int_a^b |g - m| dmu over one interval, splitting at sign changes of the
// interpolant of g - m.
double abs_deviation(const Interval& iv, double m, const DunklParams& params) {
    bool pos = false;
    bool neg = false;
    double direct = 0.0;
    for (std::size_t k = 0; k < iv.t.size(); ++k) {
        const double d = iv.g[k] - m;
        pos = pos || d > 0.0;
        neg = neg || d < 0.0;
        direct += iv.w[k] * d;
    }
    if (!(pos && neg)) {
        // Check a finer sample for a sign change hidden between nodes.
        const int probes = 4 * static_cast<int>(iv.t.size());
        bool flip = false;
        const double sign = pos ? 1.0 : -1.0;
        for (int k = 1; k < probes && (pos || neg); ++k) {
            const double s = iv.a + (iv.b - iv.a) * k / probes;
            if (sign * (lagrange(iv.t, iv.g, s) - m) < 0.0) {
                flip = true;
                break;
            }
        }
        if (!flip) return std::abs(direct);
    }
    const int probes = 8 * static_cast<int>(iv.t.size());
    std::vector<double> cuts{iv.a};
    auto dev = [&](double s) { return lagrange(iv.t, iv.g, s) - m; };
    double prev_s = iv.a;
    double prev_v = dev(iv.a);
    for (int k = 1; k <= probes; ++k) {
        const double s = iv.a + (iv.b - iv.a) * k / probes;
        const double v = dev(s);
        if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
            double lo = prev_s;
            double hi = s;
            double vlo = prev_v;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double vm = dev(mid);
                if ((vm < 0.0) == (vlo < 0.0)) {
                    lo = mid;
                    vlo = vm;
                } else {
                    hi = mid;
                }
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        prev_s = s;
        prev_v = v;
    }
    cuts.push_back(iv.b);
    const auto& rule = gauss_legendre(kOscillationNodes);
    const double A = params.A_alpha;
    const double wexp = params.weight_exponent();
    double total = 0.0;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double a = cuts[c];
        const double b = cuts[c + 1];
        double piece = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double s = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[k];
            piece += rule.weights[k] * 0.5 * (b - a) * dev(s) * A * std::pow(std::abs(s), wexp);
        }
        total += std::abs(piece);
    }
    return total;
}

}  // namespace

Oscillation oscillation_profile(const DunklParams& params, const ScalarField& f, double x,
                                const std::vector<double>& radii, const QuadSpec& quad) {
    if (radii.empty()) throw DomainError("oscillation_profile: no radii");
    Oscillation out;
    out.radii = radii;
    out.means.assign(radii.size(), 0.0);
    out.oscillation.assign(radii.size(), 0.0);
    if (f.constant_value) {
        std::fill(out.means.begin(), out.means.end(), *f.constant_value);
        return out;
    }
    const double R = *std::max_element(radii.begin(), radii.end());
    const double r0 = *std::min_element(radii.begin(), radii.end());
    std::vector<double> ends(radii.begin(), radii.end());
    ends.push_back(0.0);
    for (int k = 1; k <= 48; ++k) ends.push_back(r0 * std::exp2(-k / 8.0));
    const double ax = std::abs(x);
    for (const auto& b : translation_breakpoints(params, f, x)) {
        if (b.pos > 0.0 && b.pos < R) ends.push_back(b.pos);
    }
    if (f.support_radius && f.support_radius > 0.0 && x == 0.0 && *f.support_radius < R) {
        ends.push_back(*f.support_radius);
    }
    const bool singular = f.origin_exponent < 0.0 || f.origin_log || f.smoothness == Smoothness::singular_at_origin;
    if (singular) {
        const double c = x == 0.0 ? 0.0 : ax;
        const double scale = x == 0.0 ? r0 : ax;
        for (int k = 1; k <= 40; ++k) {
            const double d = scale * std::exp2(-k / 2.0);
            if (c - d > 0.0) ends.push_back(c - d);
            if (c + d < R) ends.push_back(c + d);
        }
    }
    // Also refine a little around |x| so kinks of tau_x f there are resolved.
    if (ax > 0.0) {
        for (int k = 1; k <= 6; ++k) {
            const double d = ax * std::exp2(-k);
            if (ax - d > 0.0) ends.push_back(ax - d);
            if (ax + d < R) ends.push_back(ax + d);
        }
    }
    ends.erase(std::remove_if(ends.begin(), ends.end(), [R](double e) { return e < 0.0 || e > R; }), ends.end());
    sort_unique(ends);

    const auto& rule = gauss_legendre(kOscillationNodes);
    const double A = params.A_alpha;
    const double wexp = params.weight_exponent();
    const QuadSpec inner = quad;
    const bool even_values = x == 0.0 && f.parity == Parity::even;
    // Intervals on the positive side and the mirrored negative side.
    std::vector<Interval> pos;
    std::vector<Interval> neg;
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        for (int side = 0; side < 2; ++side) {
            if (side == 1 && even_values) continue;
            Interval iv;
            iv.a = ends[i];
            iv.b = ends[i + 1];
            const double sgn = side == 0 ? 1.0 : -1.0;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                const double t = 0.5 * (iv.a + iv.b) + 0.5 * (iv.b - iv.a) * rule.nodes[k];
                iv.t.push_back(t);
                iv.w.push_back(rule.weights[k] * 0.5 * (iv.b - iv.a) * A * std::pow(t, wexp));
                iv.g.push_back(translate_real(params, f, x, sgn * t, inner));
            }
            (side == 0 ? pos : neg).push_back(std::move(iv));
        }
    }
    if (even_values) neg = pos;
    // Ball integrals at each radius, then the oscillation about the mean.
    for (std::size_t j = 0; j < radii.size(); ++j) {
        const double r = radii[j];
        double integral = 0.0;
        for (const auto* side : {&pos, &neg}) {
            for (const auto& iv : *side) {
                if (iv.b > r * (1.0 + 1e-12)) break;
                for (std::size_t k = 0; k < iv.t.size(); ++k) integral += iv.w[k] * iv.g[k];
            }
        }
        const double mu = measure_ball(params, Ball{0.0, r});
        const double m = integral / mu;
        double osc = 0.0;
        for (const auto* side : {&pos, &neg}) {
            for (const auto& iv : *side) {
                if (iv.b > r * (1.0 + 1e-12)) break;
                osc += abs_deviation(iv, m, params);
            }
        }
        out.means[j] = m;
        out.oscillation[j] = osc / mu;
    }
    return out;
}

NormResult bmo_phi_norm(const DunklParams& params, const ScalarField& f, const GrowthFunction& phi,
                        const SupGrid& grid, const QuadSpec& quad) {
    NormResult res;
    res.grid = grid;
    const auto radii = grid.radii();
    if (f.constant_value) {
        res.arg_r = radii.front();
        return res;
    }
    const auto xs = f.parity == Parity::even ? grid.xs_nonnegative() : grid.xs();
    bool first = true;
    for (double x : xs) {
        const auto prof = oscillation_profile(params, f, x, radii, quad);
        for (std::size_t j = 0; j < radii.size(); ++j) {
            const double v = prof.oscillation[j] / phi(radii[j]);
            if (first || v > res.value) {
                res.value = v;
                res.arg_r = radii[j];
                res.arg_x = x;
                first = false;
            }
        }
    }
    return res;
}

}  // namespace dunkl
