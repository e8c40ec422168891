#pragma once

#include "dunkl/core.hpp"
#include "dunkl/field.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace dunkl {

struct QuadSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_panels = 4096;
    /// Hard truncation radius for infinite domains. When empty the tail is
    /// extended dyadically until contributions become negligible.
    std::optional<double> tail_cutoff;
    int jacobi_nodes = 40;

    /// Same spec with both tolerances divided by `factor`.
    QuadSpec tightened(double factor) const;
    void validate() const;
};

/// A point where the integrand is not smooth. The integrand is assumed to
/// behave like |t - pos|^exponent (times log|t - pos| when `log` is set).
struct Breakpoint {
    double pos = 0.0;
    double exponent = 0.0;
    bool log = false;

    Breakpoint() = default;
    Breakpoint(double p) : pos(p) {}  // NOLINT: implicit on purpose
    Breakpoint(double p, double e, bool l = false) : pos(p), exponent(e), log(l) {}
};

/// Behaviour of an integrand against dmu near the origin and at interior
/// radii. An empty origin exponent means: the field's own origin exponent
/// plus the measure exponent 2 alpha + 1.
struct SingularityHints {
    std::optional<double> origin_exponent;
    bool origin_log = false;
    std::vector<Breakpoint> interior_points;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// Integrand with accurate distances to the interval ends: f(t, t - lo, hi - t).
template <class T>
using EndpointIntegrand = std::function<T(double, double, double)>;

/// Adaptive Gauss-Kronrod (7/15) on [lo, hi]. Points at lo or hi describe the
/// endpoint behaviour; points strictly inside split the interval. Panels
/// touching a singular point are mapped by t = p + h s^m so that the
/// transformed integrand is smooth. Does not throw on non-convergence.
QuadResult<double> integrate_adaptive(const EndpointIntegrand<double>& f, double lo, double hi,
                                      const std::vector<Breakpoint>& points, const QuadSpec& spec);
QuadResult<std::complex<double>> integrate_adaptive_complex(const EndpointIntegrand<std::complex<double>>& f,
                                                    double lo, double hi,
                                                    const std::vector<Breakpoint>& points,
                                                    const QuadSpec& spec);

/// Convenience overload for plain integrands. Throws AccuracyError.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const std::vector<Breakpoint>& points, const QuadSpec& spec);

/// Integral over [lo, infinity). [lo, start] is handled adaptively, then
/// dyadic panels [2^k start, 2^{k+1} start] are added until three in a row
/// fall below max(abs_tol, rel_tol |I| / 10); the geometric remainder of the
/// last panels is added. Flags divergence when contributions stop decaying.
QuadResult<double> integrate_tail(const std::function<double(double)>& f, double lo, double start,
                                  const std::vector<Breakpoint>& points, const QuadSpec& spec);
QuadResult<std::complex<double>> integrate_tail_complex(const std::function<std::complex<double>(double)>& f,
                                                double lo, double start,
                                                const std::vector<Breakpoint>& points,
                                                const QuadSpec& spec);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Cached.
const QuadratureRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for (1-u)^a (1+u)^b on [-1, 1]. Cached and safe
/// for concurrent use.
const QuadratureRule& gauss_jacobi(double a, double b, int n);

struct FullLine {};
struct BallComplement {
    Ball ball;
};
struct Annulus {
    double inner = 0.0;
    double outer = 1.0;
};
using Domain = std::variant<FullLine, Ball, BallComplement, Annulus>;

/// Integral of f against dmu over a symmetric domain, computed radially as
/// int (f(t) + f(-t)) A t^{2 alpha + 1} dt. Throws AccuracyError.
std::complex<double> integrate_mu(const DunklParams& params, const ScalarField& f, const Domain& domain,
                                  const SingularityHints& hints, const QuadSpec& spec);
/// Real part only; the imaginary part of f is ignored.
double integrate_mu_real(const DunklParams& params, const ScalarField& f, const Domain& domain,
                         const SingularityHints& hints, const QuadSpec& spec);

/// Radial integral int_lo^hi g(t) dt of an already symmetrised and weighted
/// integrand, with hi = infinity allowed. Throws AccuracyError.
double integrate_radial(const std::function<double(double)>& g, double lo, double hi,
                        const std::vector<Breakpoint>& points, const QuadSpec& spec);

/// (c/2) int_0^pi g(theta) (1 - cos theta) sin^{2 alpha} theta dtheta.
/// Gauss-Jacobi first, adaptive panels when the rule pair disagrees.
/// Throws DomainError at alpha = -1/2.
std::complex<double> integrate_theta(const DunklParams& params,
                                     const std::function<std::complex<double>(double)>& g,
                                     const QuadSpec& spec);

/// int_{-1}^{1} h(u) (1-u)^{alpha+1/2} (1+u)^{alpha-1/2} du, where h receives
/// (u, 1 - u, 1 + u) with the last two accurate near the ends. `points` are
/// extra singular or kink abscissae of h in (-1, 1); the exponents (and log
/// flags) of `plus` and `minus` describe h itself at u = 1 and u = -1, on top
/// of the weight. Their positions are ignored.
QuadResult<double> integrate_jacobi_weight(const DunklParams& params, const EndpointIntegrand<double>& h,
                                           const std::vector<Breakpoint>& points, const Breakpoint& plus,
                                           const Breakpoint& minus, const QuadSpec& spec);

}  // namespace dunkl
