#include <doctest.h>

#include "dunkl/core.hpp"
#include "dunkl/errors.hpp"

#include <cmath>
#include <numbers>

using namespace dunkl;
using doctest::Approx;

TEST_CASE("constants at alpha = 0") {
    const auto p = make_params(0.0);
    CHECK(p.d_alpha == 2.0);
    CHECK(p.A_alpha == Approx(0.5).epsilon(1e-15));
    CHECK(p.b_alpha == Approx(0.5).epsilon(1e-15));
    REQUIRE(p.c_alpha);
    CHECK(*p.c_alpha == Approx(1.0 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("classical branch has no c") {
    const auto p = make_params(-0.5);
    CHECK(p.classical());
    CHECK(p.d_alpha == 1.0);
    CHECK(p.A_alpha == Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("alpha below -1/2 is rejected") { CHECK_THROWS_AS(make_params(-0.75), DomainError); }

TEST_CASE("ball measure is b r^d, also off-centre") {
    const auto p = make_params(1.5);
    CHECK(measure_ball(p, Ball{0.0, 2.0}) == Approx(p.b_alpha * std::pow(2.0, p.d_alpha)).epsilon(1e-13));
    // B(3, 1) is the annulus 2 < |y| < 4.
    CHECK(measure_ball(p, Ball{3.0, 1.0}) ==
          Approx(p.b_alpha * (std::pow(4.0, p.d_alpha) - std::pow(2.0, p.d_alpha))).epsilon(1e-13));
}

TEST_CASE("gamma function") {
    CHECK(gamma_fn(0.5) == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(-0.5) == Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(-2.0), DomainError);
}

TEST_CASE("half-integer Bessel functions are elementary") {
    for (double z : {0.0, 0.1, 1.0, 4.5, 10.0}) {
        const double s = z == 0.0 ? 1.0 : std::sinh(z) / z;
        CHECK(bessel_j_mod(0.5, z) == Approx(s).epsilon(1e-12));
        CHECK(bessel_j_mod(-0.5, z) == Approx(std::cosh(z)).epsilon(1e-12));
    }
}

TEST_CASE("Dunkl kernel") {
    SUBCASE("classical exponential") {
        const auto p = make_params(-0.5);
        const auto e = dunkl_kernel(p, 1.7, -2.3);
        CHECK(std::abs(e - std::polar(1.0, 1.7 * -2.3)) < 1e-12);
    }
    SUBCASE("E(0) = 1 and |E| <= 1 on the imaginary axis") {
        const auto p = make_params(1.0);
        CHECK(std::abs(dunkl_kernel(p, 3.0, 0.0) - 1.0) < 1e-15);
        for (double t : {0.3, 2.0, 17.0}) CHECK(std::abs(dunkl_kernel(p, 1.0, t)) <= 1.0 + 1e-12);
    }
    SUBCASE("alpha = 1/2: j_{1/2}(t) = sin t / t") {
        const auto p = make_params(0.5);
        const double t = 2.2;
        CHECK(dunkl_kernel(p, 1.0, t).real() == Approx(std::sin(t) / t).epsilon(1e-12));
    }
}
