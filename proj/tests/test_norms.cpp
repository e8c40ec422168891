#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/verify.hpp"

#include <cmath>

using namespace dunkl;
using doctest::Approx;

namespace {
SupGrid small_grid() {
    SupGrid g;
    g.r_min = 1.0 / 16.0;
    g.r_max = 16.0;
    g.points_per_octave = 2;
    g.x_min = -4.0;
    g.x_max = 4.0;
    g.x_points = 9;
    return g;
}
ScalarField chi(double r) {
    ScalarField f = make_real_field([r](double x) { return std::abs(x) < r ? 1.0 : 0.0; }, Parity::even);
    f.support_radius = r;
    f.smoothness = Smoothness::piecewise;
    return f;
}
}  // namespace

TEST_CASE("Lebesgue norms") {
    const auto p = make_params(0.0);
    QuadSpec q;
    CHECK(lp_norm(p, chi(1.0), 2.0, q) == Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(lp_norm(p, chi(2.0), 1.0, q) == Approx(2.0).epsilon(1e-12));
    const auto g = make_real_field([](double x) { return std::exp(-0.5 * x * x); }, Parity::even);
    CHECK(lp_norm(p, g, INFINITY, q) == Approx(1.0));
    CHECK_THROWS_AS(lp_norm(p, constant_field(1.0), 2.0, q), DomainError);
}

TEST_CASE("tabulated fields") {
    std::vector<double> x{0.0, 1.0, 2.0, 4.0, 8.0};
    std::vector<double> y;
    for (double v : x) y.push_back(1.0 / (1.0 + v * v));
    const auto t = TabulatedField::from_values(x, y, Parity::even);
    CHECK(t(2.0) == Approx(0.2));
    CHECK(t(-2.0) == Approx(0.2));
    CHECK(t(16.0) == Approx(y.back() / 4.0).epsilon(1e-2));
    CHECK_THROWS_AS(TabulatedField::from_values({0.0, 1.0}, {1.0, 2.0}, Parity::even), DomainError);
}

TEST_CASE("cumulative table and ball integrals") {
    const auto p = make_params(0.5);
    QuadSpec q;
    const auto one = make_real_field([](double) { return 1.0; }, Parity::even);
    const auto t1 = CumulativeTable::build(p, one, 8.0, q);
    CHECK(t1(3.0) == Approx(0.5 * p.b_alpha * std::pow(3.0, p.d_alpha)).epsilon(1e-10));
    const auto t = CumulativeTable::build(p, chi(1.0), 16.0, q);
    CHECK(t.total() == Approx(p.b_alpha).epsilon(1e-10));
    for (double x : {0.0, 0.6, 1.3}) {
        for (double r : {0.4, 1.0, 2.5}) {
            CHECK(ball_integral(p, t, x, r, q) == Approx(ball_integral_direct(p, chi(1.0), x, r, q)).epsilon(1e-8));
        }
    }
}

TEST_CASE("Morrey and BMO norms") {
    const auto p = make_params(0.0);
    const auto g = small_grid();
    QuadSpec q = SuiteOptions::default_suite_quad();
    SUBCASE("constants have zero oscillation") {
        CHECK(bmo_phi_norm(p, constant_field(5.0), GrowthFunction::power(1.0, 0.0), g, q).value <= 1e-10);
        const auto one = make_real_field([](double) { return 1.0; }, Parity::even);
        CHECK(bmo_phi_norm(p, one, GrowthFunction::power(1.0, 0.0), g, q).value <= 1e-10);
    }
    SUBCASE("Morrey norm of an indicator at x = 0, r = 1") {
        // r^{d(1/q - 1/p)} mu(B(0, min(r, 1)))^{1/p}, p = 1, q = 2: sup is at r = 1.
        const auto r = morrey_norm(p, chi(1.0), 1.0, 2.0, g, q);
        CHECK(r.value == Approx(0.5).epsilon(1e-8));
        CHECK(r.arg_r == 1.0);
        CHECK(r.is_lower_bound);
    }
    SUBCASE("generalized Morrey norm with phi = r^{-d/p} is the Lebesgue norm on large balls") {
        const auto r = generalized_morrey_norm(p, chi(1.0), 2.0, GrowthFunction::power(1.0, -1.0), g, q);
        CHECK(r.value == Approx(std::sqrt(0.5)).epsilon(1e-8));
    }
    SUBCASE("json form") {
        const auto r = morrey_norm(p, chi(1.0), 1.0, 2.0, g, q);
        const auto s = to_json(r);
        CHECK(s.find("\"value\"") < s.find("\"arg_r\""));
        CHECK(s.find("\"lower_bound\":true") != std::string::npos);
    }
    SUBCASE("window") { CHECK_THROWS_AS(morrey_norm(p, chi(1.0), 3.0, 2.0, g, q), DomainError); }
}
