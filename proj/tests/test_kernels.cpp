#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/kernels.hpp"

#include <cmath>

using namespace dunkl;
using doctest::Approx;

TEST_CASE("growth function grammar") {
    const auto g = GrowthFunction::parse("pow:C=2,e=-0.75");
    CHECK(g.family() == GrowthFunction::Family::power);
    CHECK(g(16.0) == Approx(2.0 * std::pow(16.0, -0.75)));
    const auto h = GrowthFunction::parse("powlog:C=1,e=-1,k=1");
    CHECK(h(std::exp(1.0)) == Approx(2.0 / std::exp(1.0)));
    CHECK(g.powered(2.0)(4.0) == Approx(g(4.0) * g(4.0)));
    CHECK_THROWS_WITH_AS(GrowthFunction::parse("pow:C=1,z=2"), doctest::Contains("z"), DomainError);
    CHECK_THROWS_AS(GrowthFunction::parse("cubic:C=1"), DomainError);
}

TEST_CASE("Bessel-Riesz kernel norm equals the Beta oracle") {
    const auto p = make_params(0.0);
    const auto k = KernelSpec::bessel_riesz(p, 1.0, 1.0);
    CHECK(kernel_lt_norm_quadrature(k, 1.5, QuadSpec{}) == Approx(std::cbrt(4.0)).epsilon(1e-9));
    CHECK_THROWS_AS(kernel_lt_norm_quadrature(k, 2.5, QuadSpec{}), DomainError);
    CHECK_THROWS_AS(KernelSpec::bessel_riesz(p, 2.5, 1.0), DomainError);
}

TEST_CASE("dyadic sums reindex exactly") {
    const auto p = make_params(0.0);
    const auto k = KernelSpec::bessel_riesz(p, 1.0, 1.0);
    const auto s = kernel_lt_norm_dyadic_auto(k, 1.5, 0.5);
    const auto shifted = kernel_lt_norm_dyadic(k, 1.5, 1.0, s.k_min - 1, s.k_max - 1);
    CHECK(shifted.sum == Approx(s.sum).epsilon(1e-12));
}

TEST_CASE("condition checkers on power laws") {
    const auto p = make_params(0.0);
    SUBCASE("eq45 holds iff beta < 1 with constant 1/(1 - beta)") {
        for (double b : {0.25, 0.5, 0.75}) {
            ConditionInputs in;
            in.rho = GrowthFunction::power(1.0, b);
            const auto r = check_condition("eq45", in, p);
            CHECK(r.holds);
            CHECK(r.constant_estimate == Approx(1.0 / (1.0 - b)).epsilon(1e-6));
        }
        for (double b : {1.0, 1.5}) {
            ConditionInputs in;
            in.rho = GrowthFunction::power(1.0, b);
            CHECK_FALSE(check_condition("eq45", in, p).holds);
        }
    }
    SUBCASE("eq47 and eq48 for the canonical BMO instance have constant 2") {
        ConditionInputs in;
        in.rho = GrowthFunction::power(1.0, 0.5);
        in.phi = GrowthFunction::power(1.0, 0.0);
        in.psi = GrowthFunction::power(1.0, 0.5);
        const auto a = check_condition("eq47", in, p);
        CHECK(a.holds);
        CHECK(a.constant_estimate == Approx(2.0).epsilon(1e-6));
        CHECK(check_condition("eq48", in, p).holds);
    }
    SUBCASE("doubling") {
        ConditionInputs in;
        in.subject = GrowthFunction::power(1.0, -1.5);
        CHECK(check_condition("doubling_3_3a", in, p).holds);
        // a jump inside the grid is doubling with a huge constant
        in.subject = GrowthFunction::tabulated({{0.001, 1.0}, {1.0, 1.0}, {1.001, 1e6}, {1000.0, 1e6}});
        const auto jump = check_condition("doubling_3_3a", in, p);
        CHECK(jump.holds);
        CHECK(jump.constant_estimate >= 1e5);
        // growth that keeps steepening towards the edge is not
        in.subject = GrowthFunction::tabulated({{0.001, 1.0}, {256.0, 1.0}, {512.0, 1e3}, {1024.0, 1e12}});
        CHECK_FALSE(check_condition("doubling_3_3a", in, p).holds);
    }
    SUBCASE("unknown id") { CHECK_THROWS_AS(check_condition("eq99", ConditionInputs{}, p), DomainError); }
}

TEST_CASE("kernel Morrey norms are below the Lebesgue norm") {
    const auto p = make_params(0.0);
    const auto k = KernelSpec::bessel_riesz(p, 1.0, 1.0);
    SupGrid g;
    g.points_per_octave = 2;
    g.x_points = 9;
    g.x_min = -4.0;
    g.x_max = 4.0;
    const QuadSpec q = QuadSpec{}.tightened(0.01);
    CHECK(kernel_morrey_st_norm(k, 1.2, 1.5, g, q) <= kernel_lt_norm_quadrature(k, 1.5, q) * 1.01);
}
