#include <doctest.h>

#include "dunkl/dunklops.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/verify.hpp"

#include <cmath>

using namespace dunkl;
using doctest::Approx;

namespace {
ScalarField gaussian() {
    return make_real_field([](double x) { return std::exp(-0.5 * x * x); }, Parity::even);
}
ScalarField chi(double r) {
    ScalarField f = make_real_field([r](double x) { return std::abs(x) < r ? 1.0 : 0.0; }, Parity::even);
    f.support_radius = r;
    f.smoothness = Smoothness::piecewise;
    return f;
}
}  // namespace

TEST_CASE("transform of the Gaussian is the Gaussian") {
    QuadSpec q;
    for (double a : {-0.5, 0.0, 1.5}) {
        const auto p = make_params(a);
        for (double l : {0.0, 0.5, 2.0}) {
            const auto v = transform_at(p, gaussian(), l, q);
            CHECK(v.real() == Approx(std::exp(-0.5 * l * l)).epsilon(1e-9));
            CHECK(std::abs(v.imag()) < 1e-12);
        }
    }
}

TEST_CASE("translation oracles") {
    QuadSpec q;
    SUBCASE("classical shift") {
        const auto p = make_params(-0.5);
        CHECK(translate_real(p, gaussian(), 1.0, 0.5, q) == Approx(std::exp(-0.5 * 2.25)));
    }
    SUBCASE("alpha = 1/2 indicator, closed form 0.234375") {
        const auto p = make_params(0.5);
        CHECK(translate_real(p, chi(1.0), -1.5, 1.0, q) == Approx(0.234375).epsilon(1e-12));
    }
    SUBCASE("alpha = 0 indicator (independent high-precision quadrature)") {
        const auto p = make_params(0.0);
        CHECK(translate_real(p, chi(1.0), 2.0, 2.0, q) == Approx(0.0067601354949575361).epsilon(1e-9));
    }
    SUBCASE("alpha = 1 Gaussian (independent high-precision quadrature)") {
        const auto p = make_params(1.0);
        CHECK(translate_real(p, gaussian(), 1.0, 0.7, q) == Approx(0.41788829177704207).epsilon(1e-10));
    }
    SUBCASE("odd function (independent high-precision quadrature)") {
        const auto p = make_params(0.5);
        const auto f = make_real_field([](double x) { return x * std::exp(-0.5 * x * x); }, Parity::odd);
        CHECK(translate_real(p, f, 0.8, -0.3, q) == Approx(0.37836821742933943).epsilon(1e-10));
    }
    SUBCASE("identity and symmetry") {
        const auto p = make_params(2.0);
        const auto f = make_real_field([](double x) { return std::exp(-x * x) * (1.0 + x); });
        CHECK(translate_real(p, f, 0.0, 0.4, q) == f.real(0.4));
        CHECK(translate_real(p, f, 0.9, -1.3, q) == Approx(translate_real(p, f, -1.3, 0.9, q)).epsilon(1e-10));
    }
}

TEST_CASE("translated indicator vanishes outside the ball") {
    const auto p = make_params(0.0);
    QuadSpec q;
    CHECK(translate_real(p, chi(1.0), 2.0, 3.5, q) == 0.0);
    CHECK(translate_real(p, chi(1.0), 2.0, 0.5, q) == 0.0);
}

TEST_CASE("translation breakpoints") {
    const auto p = make_params(0.0);
    const auto b = translation_breakpoints(p, chi(1.0), 3.0);
    REQUIRE(b.size() == 2);
    CHECK(b[0].pos == 2.0);
    CHECK(b[1].pos == 4.0);
}

TEST_CASE("convolution with the Gaussian multiplies transforms") {
    const auto p = make_params(0.0);
    QuadSpec q;
    const auto g = gaussian();
    const auto conv = make_real_field([&](double x) { return convolve_real(p, g, g, x, q); }, Parity::even);
    const double l = 0.8;
    const auto lhs = transform_at(p, conv, l, QuadSpec{}.tightened(0.1));
    CHECK(lhs.real() == Approx(std::exp(-l * l)).epsilon(1e-6));
}

TEST_CASE("inverse transform round trip") {
    const auto p = make_params(0.5);
    QuadSpec q;
    const auto spec = spectrum_field(p, gaussian(), q);
    const auto back = inverse_transform(p, spec, {0.0, 1.0, -2.0}, q);
    CHECK(back[1].real() == Approx(std::exp(-0.5)).epsilon(1e-7));
    CHECK(back[2].real() == Approx(std::exp(-2.0)).epsilon(1e-7));
}

TEST_CASE("kernel translation") {
    const auto p = make_params(0.0);
    QuadSpec q;
    const auto k = KernelSpec::bessel_riesz(p, 1.0, 0.0);
    CHECK(translate_kernel(p, k, 0.0, 2.0, q) == Approx(0.5));
    const double v = translate_kernel(p, k, 1.0, 3.0, q);
    CHECK(v > 0.0);
    CHECK(v <= 0.5);
    CHECK(translate_kernel_difference(p, k, 1.0, 3.0, q) == Approx(v - 1.0 / 3.0).epsilon(1e-9));
}
