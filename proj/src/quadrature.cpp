#include "dunkl/quadrature.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <shared_mutex>
#include <tuple>

#include <Eigen/Dense>

namespace dunkl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point abscissae and weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double magnitude(double v) { return std::abs(v); }
double magnitude(std::complex<double> v) { return std::abs(v); }

enum class MapKind { affine, power_left, power_right };

struct Panel {
    double a;
    double b;
    MapKind kind;
    double m;
};

bool is_singular(const Breakpoint& p) {
    return p.log || p.exponent < 0.0 || p.exponent != std::round(p.exponent);
}

double map_power(const Breakpoint& p) {
    const double top = p.log ? 3.0 : 2.0;
    const double m = p.exponent < 0.0 ? top / (1.0 + p.exponent) : top;
    return std::min(m, 24.0);
}

template <class T>
struct Sub {
    int panel;
    double s0;
    double s1;
    T value;
    double error;
    double resabs;
};

template <class T>
struct Engine {
    const EndpointIntegrand<T>& f;
    double lo;
    double hi;
    std::vector<Panel> panels;
    long evaluations = 0;

    T eval(const Panel& p, double s, double& jac) {
        const double h = p.b - p.a;
        double t = 0.0;
        double dl = 0.0;
        double dr = 0.0;
        switch (p.kind) {
            case MapKind::affine:
                t = p.a + h * s;
                dl = (p.a - lo) + h * s;
                dr = hi - t;
                jac = h;
                break;
            case MapKind::power_left: {
                const double sm = std::pow(s, p.m);
                t = p.a + h * sm;
                dl = (p.a - lo) + h * sm;
                dr = (hi - p.b) + (h - h * sm);
                jac = h * p.m * (s > 0.0 ? sm / s : (p.m == 1.0 ? 1.0 : 0.0));
                break;
            }
            case MapKind::power_right: {
                const double sm = std::pow(s, p.m);
                t = p.b - h * sm;
                dr = (hi - p.b) + h * sm;
                dl = (p.a - lo) + (h - h * sm);
                jac = h * p.m * (s > 0.0 ? sm / s : (p.m == 1.0 ? 1.0 : 0.0));
                break;
            }
        }
        ++evaluations;
        if (jac == 0.0) return T{};
        return f(t, dl, dr);
    }

    Sub<T> kronrod(int panel, double s0, double s1) {
        const Panel& p = panels[static_cast<std::size_t>(panel)];
        const double center = 0.5 * (s0 + s1);
        const double half = 0.5 * (s1 - s0);
        T fv[15];
        double jac = 0.0;
        fv[7] = eval(p, center, jac) * jac;
        for (int j = 0; j < 7; ++j) {
            const double dx = half * kXgk[j];
            fv[j] = eval(p, center - dx, jac) * jac;
            fv[14 - j] = eval(p, center + dx, jac) * jac;
        }
        T resk = fv[7] * kWgk[7];
        T resg = fv[7] * kWg[3];
        double resabs = magnitude(resk);
        for (int j = 0; j < 7; ++j) {
            const T pair = fv[j] + fv[14 - j];
            resk += pair * kWgk[j];
            resabs += kWgk[j] * (magnitude(fv[j]) + magnitude(fv[14 - j]));
            if (j % 2 == 1) resg += pair * kWg[j / 2];
        }
        const T mean = resk * 0.5;
        double resasc = kWgk[7] * magnitude(fv[7] - mean);
        for (int j = 0; j < 7; ++j) {
            resasc += kWgk[j] * (magnitude(fv[j] - mean) + magnitude(fv[14 - j] - mean));
        }
        resk *= half;
        resabs *= std::abs(half);
        resasc *= std::abs(half);
        double err = magnitude((resk - resg * half));
        if (resasc != 0.0 && err != 0.0) {
            err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        }
        if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
            err = std::max(50.0 * kEps * resabs, err);
        }
        if (!std::isfinite(magnitude(resk))) err = std::numeric_limits<double>::infinity();
        return {panel, s0, s1, resk, err, resabs};
    }
};

template <class T>
QuadResult<T> adaptive_impl(const EndpointIntegrand<T>& f, double lo, double hi,
                            const std::vector<Breakpoint>& points, const QuadSpec& spec) {
    QuadResult<T> out;
    if (!(hi > lo)) return out;

    // Sorted breakpoints, ends included.
    Breakpoint left{lo};
    Breakpoint right{hi};
    std::vector<Breakpoint> pts;
    for (const auto& p : points) {
        if (p.pos == lo) {
            left = p;
        } else if (p.pos == hi) {
            right = p;
        } else if (p.pos > lo && p.pos < hi) {
            pts.push_back(p);
        }
    }
    std::sort(pts.begin(), pts.end(), [](const Breakpoint& x, const Breakpoint& y) { return x.pos < y.pos; });
    std::vector<Breakpoint> all;
    all.push_back(left);
    for (const auto& p : pts) {
        if (all.back().pos == p.pos) {
            if (is_singular(p)) all.back() = p;
        } else {
            all.push_back(p);
        }
    }
    if (all.back().pos == hi) {
        all.back() = right;
    } else {
        all.push_back(right);
    }

    Engine<T> engine{f, lo, hi, {}};
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        const Breakpoint& l = all[i];
        const Breakpoint& r = all[i + 1];
        const bool ls = is_singular(l);
        const bool rs = is_singular(r);
        if (ls && rs) {
            const double mid = 0.5 * (l.pos + r.pos);
            engine.panels.push_back({l.pos, mid, MapKind::power_left, map_power(l)});
            engine.panels.push_back({mid, r.pos, MapKind::power_right, map_power(r)});
        } else if (ls) {
            engine.panels.push_back({l.pos, r.pos, MapKind::power_left, map_power(l)});
        } else if (rs) {
            engine.panels.push_back({l.pos, r.pos, MapKind::power_right, map_power(r)});
        } else {
            engine.panels.push_back({l.pos, r.pos, MapKind::affine, 1.0});
        }
    }

    auto cmp = [](const Sub<T>& x, const Sub<T>& y) { return x.error < y.error; };
    std::priority_queue<Sub<T>, std::vector<Sub<T>>, decltype(cmp)> heap(cmp);
    T total{};
    double err = 0.0;
    double resabs = 0.0;
    for (int i = 0; i < static_cast<int>(engine.panels.size()); ++i) {
        Sub<T> s = engine.kronrod(i, 0.0, 1.0);
        total += s.value;
        err += s.error;
        resabs += s.resabs;
        heap.push(s);
    }
    int count = static_cast<int>(heap.size());
    auto tolerance = [&] {
        return std::max({spec.abs_tol, spec.rel_tol * magnitude(total), 100.0 * kEps * resabs});
    };
    bool stuck = false;
    while (err > tolerance() && count < spec.max_panels) {
        Sub<T> worst = heap.top();
        const double mid = 0.5 * (worst.s0 + worst.s1);
        if (!(mid > worst.s0 && mid < worst.s1) || (worst.s1 - worst.s0) < 1e-15) {
            stuck = true;
            break;
        }
        heap.pop();
        Sub<T> a = engine.kronrod(worst.panel, worst.s0, mid);
        Sub<T> b = engine.kronrod(worst.panel, mid, worst.s1);
        total += a.value + b.value - worst.value;
        err += a.error + b.error - worst.error;
        resabs += a.resabs + b.resabs - worst.resabs;
        heap.push(a);
        heap.push(b);
        ++count;
    }
    // Re-sum to shed accumulated drift.
    T sum{};
    double esum = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        esum += heap.top().error;
        heap.pop();
    }
    out.value = sum;
    out.error = esum;
    out.evaluations = engine.evaluations;
    out.converged = !stuck && std::isfinite(magnitude(sum)) &&
                    esum <= std::max({spec.abs_tol, spec.rel_tol * magnitude(sum), 100.0 * kEps * resabs});
    return out;
}

template <class T>
QuadResult<T> tail_impl(const std::function<T(double)>& f, double lo, double start,
                        const std::vector<Breakpoint>& points, const QuadSpec& spec) {
    const EndpointIntegrand<T> wrapped = [&f](double t, double, double) { return f(t); };
    QuadResult<T> out;
    if (start > lo) out = adaptive_impl<T>(wrapped, lo, start, points, spec);
    start = std::max(start, lo);
    if (start <= 0.0) {
        throw DomainError("integrate_tail: dyadic start must be positive");
    }
    double last_point = start;
    for (const auto& p : points) last_point = std::max(last_point, p.pos);
    const double cutoff = spec.tail_cutoff.value_or(std::numeric_limits<double>::infinity());
    const int max_octaves = std::min(spec.max_panels, 400);

    double a = start;
    int small = 0;
    int growing = 0;
    std::vector<T> contrib;
    bool done = false;
    for (int k = 0; k < max_octaves && a < cutoff; ++k) {
        const double b = std::min(2.0 * a, cutoff);
        std::vector<Breakpoint> inner;
        for (const auto& p : points) {
            if (p.pos >= a && p.pos <= b) inner.push_back(p);
        }
        QuadResult<T> r = adaptive_impl<T>(wrapped, a, b, inner, spec);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
        contrib.push_back(r.value);
        a = b;
        if (b >= cutoff) {
            done = true;
            break;
        }
        if (a <= last_point) continue;
        const double thresh = std::max(spec.abs_tol, 0.1 * spec.rel_tol * magnitude(out.value));
        const double c = magnitude(r.value);
        small = c < thresh ? small + 1 : 0;
        const std::size_t n = contrib.size();
        if (n >= 2 && magnitude(contrib[n - 2]) > 0.0 && c >= 0.999 * magnitude(contrib[n - 2]) && c > thresh) {
            ++growing;
        } else {
            growing = 0;
        }
        if (growing >= 8) break;
        if (n >= 3 && magnitude(contrib[n - 2]) > 0.0 && magnitude(contrib[n - 3]) > 0.0) {
            const T q1 = contrib[n - 1] / contrib[n - 2];
            const T q0 = contrib[n - 2] / contrib[n - 3];
            const double aq = magnitude(q1);
            if (aq < 0.95) {
                const T rem = contrib[n - 1] * q1 / (T(1.0) - q1);
                const double rem_err =
                    magnitude(rem) * std::min(1.0, 10.0 * magnitude(q1 - q0) / (1.0 - aq));
                if (rem_err < thresh || small >= 3) {
                    if (rem_err < magnitude(rem)) out.value += rem;
                    out.error += rem_err;
                    done = true;
                    break;
                }
            }
        }
        if (small >= 3) {
            done = true;
            break;
        }
    }
    out.converged = out.converged && done;
    return out;
}

// Orthonormal Jacobi recurrence coefficients: diagonal alpha_k and
// off-diagonal sqrt(beta_k), k = 1..n-1.
void jacobi_recurrence(double a, double b, int n, std::vector<double>& diag, std::vector<double>& off) {
    diag.assign(static_cast<std::size_t>(n), 0.0);
    off.assign(static_cast<std::size_t>(std::max(n - 1, 0)), 0.0);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + ab;
        if (k == 0) {
            diag[0] = (b - a) / (ab + 2.0);
        } else {
            diag[static_cast<std::size_t>(k)] = (b * b - a * a) / (s * (s + 2.0));
        }
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        double beta = 0.0;
        if (k == 1) {
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        off[static_cast<std::size_t>(k - 1)] = std::sqrt(beta);
    }
}

QuadratureRule golub_welsch(double a, double b, int n) {
    std::vector<double> diag;
    std::vector<double> off;
    jacobi_recurrence(a, b, n, diag, off);
    const double log_mu0 = (a + b + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                           std::lgamma(a + b + 2.0);
    const double mu0 = std::exp(log_mu0);

    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    if (n == 1) {
        rule.nodes[0] = diag[0];
        rule.weights[0] = mu0;
        return rule;
    }
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
    Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(off.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();

    // Newton polish on the orthonormal p_n, then weights from the
    // Christoffel function 1 / sum_k p_k(x)^2.
    const double p0 = 1.0 / std::sqrt(mu0);
    for (int i = 0; i < n; ++i) {
        double x = ev(i);
        double sum_sq = 0.0;
        for (int iter = 0; iter < 6; ++iter) {
            double pm1 = 0.0;
            double p = p0;
            double dpm1 = 0.0;
            double dp = 0.0;
            sum_sq = p * p;
            for (int k = 0; k < n; ++k) {
                const double sb_next = k + 1 < n ? off[static_cast<std::size_t>(k)] : 0.0;
                const double sb_prev = k > 0 ? off[static_cast<std::size_t>(k - 1)] : 0.0;
                const double dk = diag[static_cast<std::size_t>(k)];
                if (k + 1 < n) {
                    const double pn = ((x - dk) * p - sb_prev * pm1) / sb_next;
                    const double dpn = (p + (x - dk) * dp - sb_prev * dpm1) / sb_next;
                    pm1 = p;
                    dpm1 = dp;
                    p = pn;
                    dp = dpn;
                    sum_sq += p * p;
                } else {
                    // Last step: unnormalised p_n, whose root we want.
                    const double pn = (x - dk) * p - sb_prev * pm1;
                    const double dpn = p + (x - dk) * dp - sb_prev * dpm1;
                    if (dpn != 0.0) {
                        const double step = pn / dpn;
                        x -= step;
                        if (std::abs(step) < 4.0 * kEps * std::max(std::abs(x), 1e-3)) iter = 6;
                    }
                }
            }
        }
        // Recompute the Christoffel sum at the polished node.
        double pm1 = 0.0;
        double p = p0;
        sum_sq = p * p;
        for (int k = 0; k + 1 < n; ++k) {
            const double sb_next = off[static_cast<std::size_t>(k)];
            const double sb_prev = k > 0 ? off[static_cast<std::size_t>(k - 1)] : 0.0;
            const double pn = ((x - diag[static_cast<std::size_t>(k)]) * p - sb_prev * pm1) / sb_next;
            pm1 = p;
            p = pn;
            sum_sq += p * p;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 1.0 / sum_sq;
    }
    return rule;
}

struct RuleCache {
    std::shared_mutex mutex;
    std::map<std::tuple<double, double, int>, std::unique_ptr<QuadratureRule>> rules;

    const QuadratureRule& get(double a, double b, int n) {
        const auto key = std::make_tuple(a, b, n);
        {
            std::shared_lock lock(mutex);
            auto it = rules.find(key);
            if (it != rules.end()) return *it->second;
        }
        auto rule = std::make_unique<QuadratureRule>(golub_welsch(a, b, n));
        std::unique_lock lock(mutex);
        auto [it, inserted] = rules.emplace(key, std::move(rule));
        return *it->second;
    }
};

RuleCache& rule_cache() {
    static RuleCache cache;
    return cache;
}

double origin_exponent_for(const DunklParams& params, const ScalarField& f, const SingularityHints& hints) {
    if (hints.origin_exponent) return *hints.origin_exponent;
    return f.origin_exponent + params.weight_exponent();
}

std::vector<Breakpoint> radial_points(const ScalarField& f, const SingularityHints& hints) {
    std::vector<Breakpoint> pts;
    for (double b : f.radial_breaks()) pts.emplace_back(b);
    for (const auto& p : hints.interior_points) {
        if (p.pos > 0.0) pts.push_back(p);
    }
    return pts;
}

template <class T>
QuadResult<T> radial_impl(const std::function<T(double)>& g, double lo, double hi,
                          std::vector<Breakpoint> pts, Breakpoint origin, const QuadSpec& spec) {
    if (lo == 0.0) {
        origin.pos = 0.0;
        pts.push_back(origin);
    }
    if (std::isfinite(hi)) {
        const EndpointIntegrand<T> w = [&g](double t, double, double) { return g(t); };
        return adaptive_impl<T>(w, lo, hi, pts, spec);
    }
    double start = lo > 0.0 ? 2.0 * lo : 1.0;
    for (const auto& p : pts) {
        if (p.pos > lo) start = std::max(start, p.pos);
    }
    return tail_impl<T>(g, lo, start, pts, spec);
}

void check(const char* what, bool converged, std::complex<double> value, double error) {
    if (!converged) {
        throw AccuracyError(std::string(what) + ": quadrature did not converge", value, error);
    }
}

struct RadialRange {
    double lo;
    double hi;
};

std::vector<RadialRange> ranges_of(const Domain& domain) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(
        [&](const auto& d) -> std::vector<RadialRange> {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FullLine>) {
                return {{0.0, inf}};
            } else if constexpr (std::is_same_v<D, Ball>) {
                if (!(d.radius > 0.0)) throw DomainError("ball radius must be positive");
                return {{d.inner(), d.outer()}};
            } else if constexpr (std::is_same_v<D, BallComplement>) {
                if (!(d.ball.radius > 0.0)) throw DomainError("ball radius must be positive");
                std::vector<RadialRange> r;
                if (d.ball.inner() > 0.0) r.push_back({0.0, d.ball.inner()});
                r.push_back({d.ball.outer(), inf});
                return r;
            } else {
                if (!(d.outer > d.inner) || d.inner < 0.0) throw DomainError("invalid annulus");
                return {{d.inner, d.outer}};
            }
        },
        domain);
}

}  // namespace

QuadSpec QuadSpec::tightened(double factor) const {
    QuadSpec out = *this;
    out.rel_tol /= factor;
    out.abs_tol /= factor;
    return out;
}

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
    if (max_panels < 1) throw DomainError("max_panels must be >= 1");
    if (jacobi_nodes < 2) throw DomainError("jacobi_nodes must be >= 2");
}

QuadResult<double> integrate_adaptive(const EndpointIntegrand<double>& f, double lo, double hi,
                                      const std::vector<Breakpoint>& points, const QuadSpec& spec) {
    return adaptive_impl<double>(f, lo, hi, points, spec);
}

QuadResult<std::complex<double>> integrate_adaptive_complex(const EndpointIntegrand<std::complex<double>>& f,
                                                    double lo, double hi,
                                                    const std::vector<Breakpoint>& points,
                                                    const QuadSpec& spec) {
    return adaptive_impl<std::complex<double>>(f, lo, hi, points, spec);
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const std::vector<Breakpoint>& points, const QuadSpec& spec) {
    const EndpointIntegrand<double> w = [&f](double t, double, double) { return f(t); };
    auto r = adaptive_impl<double>(w, lo, hi, points, spec);
    check("integrate", r.converged, r.value, r.error);
    return r.value;
}

QuadResult<double> integrate_tail(const std::function<double(double)>& f, double lo, double start,
                                  const std::vector<Breakpoint>& points, const QuadSpec& spec) {
    return tail_impl<double>(f, lo, start, points, spec);
}

QuadResult<std::complex<double>> integrate_tail_complex(const std::function<std::complex<double>(double)>& f,
                                                double lo, double start,
                                                const std::vector<Breakpoint>& points,
                                                const QuadSpec& spec) {
    return tail_impl<std::complex<double>>(f, lo, start, points, spec);
}

const QuadratureRule& gauss_legendre(int n) { return gauss_jacobi(0.0, 0.0, n); }

const QuadratureRule& gauss_jacobi(double a, double b, int n) {
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");
    if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
    return rule_cache().get(a, b, n);
}

std::complex<double> integrate_mu(const DunklParams& params, const ScalarField& f, const Domain& domain,
                                  const SingularityHints& hints, const QuadSpec& spec) {
    if (f.is_real()) return {integrate_mu_real(params, f, domain, hints, spec), 0.0};
    const double A = params.A_alpha;
    const double w = params.weight_exponent();
    std::function<std::complex<double>(double)> g;
    switch (f.parity) {
        case Parity::even:
            g = [&](double t) { return 2.0 * f(t) * (A * std::pow(t, w)); };
            break;
        case Parity::odd:
            return {0.0, 0.0};
        case Parity::none:
            g = [&](double t) { return (f(t) + f(-t)) * (A * std::pow(t, w)); };
            break;
    }
    if (f.support_radius && *f.support_radius == 0.0) return {0.0, 0.0};
    const Breakpoint origin{0.0, origin_exponent_for(params, f, hints), hints.origin_log || f.origin_log};
    const auto pts = radial_points(f, hints);
    std::complex<double> total = 0.0;
    for (auto rr : ranges_of(domain)) {
        if (f.support_radius) rr.hi = std::min(rr.hi, *f.support_radius);
        if (!(rr.hi > rr.lo)) continue;
        auto r = radial_impl<std::complex<double>>(g, rr.lo, rr.hi, pts, origin, spec);
        check("integrate_mu", r.converged, total + r.value, r.error);
        total += r.value;
    }
    return total;
}

double integrate_mu_real(const DunklParams& params, const ScalarField& f, const Domain& domain,
                         const SingularityHints& hints, const QuadSpec& spec) {
    const double A = params.A_alpha;
    const double w = params.weight_exponent();
    std::function<double(double)> g;
    switch (f.parity) {
        case Parity::even:
            g = [&](double t) { return 2.0 * f.real(t) * (A * std::pow(t, w)); };
            break;
        case Parity::odd:
            return 0.0;
        case Parity::none:
            g = [&](double t) { return (f.real(t) + f.real(-t)) * (A * std::pow(t, w)); };
            break;
    }
    if (f.support_radius && *f.support_radius == 0.0) return 0.0;
    const Breakpoint origin{0.0, origin_exponent_for(params, f, hints), hints.origin_log || f.origin_log};
    const auto pts = radial_points(f, hints);
    double total = 0.0;
    for (auto rr : ranges_of(domain)) {
        if (f.support_radius) rr.hi = std::min(rr.hi, *f.support_radius);
        if (!(rr.hi > rr.lo)) continue;
        auto r = radial_impl<double>(g, rr.lo, rr.hi, pts, origin, spec);
        check("integrate_mu", r.converged, total + r.value, r.error);
        total += r.value;
    }
    return total;
}

double integrate_radial(const std::function<double(double)>& g, double lo, double hi,
                        const std::vector<Breakpoint>& points, const QuadSpec& spec) {
    Breakpoint origin{0.0};
    for (const auto& p : points) {
        if (p.pos == 0.0) origin = p;
    }
    std::vector<Breakpoint> pts;
    for (const auto& p : points) {
        if (p.pos != 0.0) pts.push_back(p);
    }
    if (lo != 0.0) {
        for (const auto& p : points) {
            if (p.pos == lo) pts.push_back(p);
        }
    }
    auto r = radial_impl<double>(g, lo, hi, pts, origin, spec);
    check("integrate_radial", r.converged, r.value, r.error);
    return r.value;
}

std::complex<double> integrate_theta(const DunklParams& params,
                                     const std::function<std::complex<double>(double)>& g,
                                     const QuadSpec& spec) {
    if (params.classical()) {
        throw DomainError("integrate_theta: alpha = -1/2 uses the classical translation");
    }
    const double a = params.alpha + 0.5;
    const double b = params.alpha - 0.5;
    const double c = *params.c_alpha;
    const int n = std::max(spec.jacobi_nodes, 4);
    const auto& fine = gauss_jacobi(a, b, n);
    const auto& coarse = gauss_jacobi(a, b, n / 2);
    std::complex<double> s_fine = 0.0;
    std::complex<double> s_coarse = 0.0;
    for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
        s_fine += fine.weights[i] * g(std::acos(fine.nodes[i]));
    }
    for (std::size_t i = 0; i < coarse.nodes.size(); ++i) {
        s_coarse += coarse.weights[i] * g(std::acos(coarse.nodes[i]));
    }
    if (std::abs(s_fine - s_coarse) <= std::max(spec.abs_tol, spec.rel_tol * std::abs(s_fine))) {
        return 0.5 * c * s_fine;
    }
    const EndpointIntegrand<std::complex<double>> h = [&](double u, double opu, double omu) {
        const double theta = u > 0.0 ? 2.0 * std::asin(std::sqrt(0.5 * omu)) : 2.0 * std::acos(std::sqrt(0.5 * opu));
        return g(theta) * (std::pow(omu, a) * std::pow(opu, b));
    };
    auto r = adaptive_impl<std::complex<double>>(h, -1.0, 1.0, {Breakpoint{-1.0, b}, Breakpoint{1.0, a}}, spec);
    check("integrate_theta", r.converged, 0.5 * c * r.value, 0.5 * c * r.error);
    return 0.5 * c * r.value;
}

QuadResult<double> integrate_jacobi_weight(const DunklParams& params, const EndpointIntegrand<double>& h,
                                           const std::vector<Breakpoint>& points, const Breakpoint& plus,
                                           const Breakpoint& minus, const QuadSpec& spec) {
    if (params.classical()) {
        throw DomainError("integrate_jacobi_weight: alpha = -1/2 uses the classical translation");
    }
    const double a = params.alpha + 0.5;
    const double b = params.alpha - 0.5;
    const bool smooth = points.empty() && !is_singular(plus) && !is_singular(minus) &&
                        plus.exponent == 0.0 && minus.exponent == 0.0;
    if (smooth) {
        const int n = std::max(spec.jacobi_nodes, 4);
        const auto& fine = gauss_jacobi(a, b, n);
        const auto& coarse = gauss_jacobi(a, b, n / 2);
        double s_fine = 0.0;
        double s_coarse = 0.0;
        double s_abs = 0.0;
        for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
            const double u = fine.nodes[i];
            const double v = fine.weights[i] * h(u, 1.0 - u, 1.0 + u);
            s_fine += v;
            s_abs += std::abs(v);
        }
        for (std::size_t i = 0; i < coarse.nodes.size(); ++i) {
            const double u = coarse.nodes[i];
            s_coarse += coarse.weights[i] * h(u, 1.0 - u, 1.0 + u);
        }
        const double diff = std::abs(s_fine - s_coarse);
        if (diff <= std::max({spec.abs_tol, spec.rel_tol * std::abs(s_fine), 1e3 * kEps * s_abs})) {
            return {s_fine, diff, static_cast<long>(fine.nodes.size() + coarse.nodes.size()), true};
        }
    }
    const EndpointIntegrand<double> w = [&](double u, double opu, double omu) {
        return h(u, omu, opu) * (std::pow(omu, a) * std::pow(opu, b));
    };
    std::vector<Breakpoint> pts = points;
    pts.emplace_back(-1.0, b + minus.exponent, minus.log);
    pts.emplace_back(1.0, a + plus.exponent, plus.log);
    return adaptive_impl<double>(w, -1.0, 1.0, pts, spec);
}

}  // namespace dunkl
