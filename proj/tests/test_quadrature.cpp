#include <doctest.h>

#include "dunkl/core.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/field.hpp"
#include "dunkl/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace dunkl;
using doctest::Approx;

TEST_CASE("Gauss rules") {
    const auto& gl = gauss_legendre(12);
    double s = 0.0;
    double m4 = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        s += gl.weights[i];
        m4 += gl.weights[i] * std::pow(gl.nodes[i], 4);
    }
    CHECK(s == Approx(2.0).epsilon(1e-14));
    CHECK(m4 == Approx(0.4).epsilon(1e-14));

    // int (1-u)^{1/2} (1+u)^{-1/2} du = pi
    const auto& gj = gauss_jacobi(0.5, -0.5, 20);
    double w = 0.0;
    for (double x : gj.weights) w += x;
    CHECK(w == Approx(std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("endpoint singularities") {
    QuadSpec q;
    const double v = integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, {Breakpoint{0.0, -0.5}}, q);
    CHECK(v == Approx(2.0).epsilon(1e-10));
    const double l = integrate([](double t) { return std::log(t); }, 0.0, 1.0, {Breakpoint{0.0, 0.0, true}}, q);
    CHECK(l == Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("interior jump") {
    QuadSpec q;
    const double v = integrate([](double t) { return t < 0.3 ? 1.0 : 0.0; }, 0.0, 1.0, {Breakpoint{0.3}}, q);
    CHECK(v == Approx(0.3).epsilon(1e-12));
}

TEST_CASE("infinite tail") {
    QuadSpec q;
    const auto r = integrate_tail([](double t) { return std::exp(-t); }, 0.0, 1.0, {}, q);
    CHECK(r.converged);
    CHECK(r.value == Approx(1.0).epsilon(1e-10));
    const auto slow = integrate_tail([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, 1.0, {}, q);
    CHECK(slow.value == Approx(std::numbers::pi / 2).epsilon(1e-8));
}

TEST_CASE("integrals against the Dunkl measure") {
    const auto p = make_params(0.75);
    QuadSpec q;
    const auto one = make_real_field([](double) { return 1.0; }, Parity::even);
    CHECK(integrate_mu_real(p, one, Ball{0.0, 2.0}, {}, q) ==
          Approx(p.b_alpha * std::pow(2.0, p.d_alpha)).epsilon(1e-10));
    // int e^{-x^2/2} dmu = 2A 2^{alpha} Gamma(alpha + 1)
    const auto g = make_real_field([](double x) { return std::exp(-0.5 * x * x); }, Parity::even);
    CHECK(integrate_mu_real(p, g, FullLine{}, {}, q) ==
          Approx(2.0 * p.A_alpha * std::pow(2.0, p.alpha) * gamma_fn(p.alpha + 1.0)).epsilon(1e-10));
    // odd integrands vanish
    const auto odd = make_real_field([](double x) { return x * std::exp(-x * x); }, Parity::odd);
    CHECK(std::abs(integrate_mu_real(p, odd, FullLine{}, {}, q)) < 1e-14);
}

TEST_CASE("theta integral normalisation") {
    const auto p = make_params(0.0);
    const auto v = integrate_theta(p, [](double) { return std::complex<double>(1.0, 0.0); }, QuadSpec{});
    CHECK(v.real() == Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(integrate_theta(make_params(-0.5), [](double) { return std::complex<double>(1.0); }, QuadSpec{}),
                    DomainError);
}

TEST_CASE("tolerance validation") {
    QuadSpec q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), DomainError);
    const auto t = QuadSpec{}.tightened(10.0);
    CHECK(t.rel_tol == Approx(1e-10));
    CHECK(t.abs_tol == Approx(1e-15));
}
