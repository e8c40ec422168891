#include <doctest.h>

#include "dunkl/field.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/errors.hpp"

#include <cmath>

using namespace dunkl;

TEST_CASE("field combinators keep metadata") {
    ScalarField f = make_real_field([](double x) { return x; }, Parity::odd);
    f.support_radius = 2.0;
    f.breakpoints = {1.0};
    const auto a = abs_pow(f, 2.0);
    CHECK(a.parity == Parity::even);
    CHECK(a(-1.5).real() == doctest::Approx(2.25));
    CHECK(a.support_radius == 2.0);
    const auto s = scaled(f, -3.0);
    CHECK(s(1.0).real() == -3.0);
    CHECK(s.parity == Parity::odd);
    const auto d = dilate(f, 1);
    CHECK(d(0.5).real() == 1.0);
    CHECK(d.support_radius == 1.0);
    CHECK(f.radial_breaks() == std::vector<double>{1.0, 2.0});
}

TEST_CASE("constants") {
    const auto c = constant_field(2.5);
    REQUIRE(c.constant_value);
    CHECK(c(17.0).real() == 2.5);
    CHECK(zero_field()(3.0).real() == 0.0);
}

TEST_CASE("sup grid") {
    SupGrid g;
    const auto r = g.radii();
    CHECK(r.front() == 1.0 / 256.0);
    CHECK(r.back() == doctest::Approx(256.0));
    CHECK(r.size() == 16 * 8 + 1);
    CHECK(g.xs().size() == 65);
    CHECK(g.xs_nonnegative().front() == 0.0);
    const auto f = g.refined();
    CHECK(f.points_per_octave == 16);
    CHECK(f.radii().size() == 16 * 16 + 1);
    g.r_min = -1.0;
    CHECK_THROWS_AS(g.validate(), DomainError);
}
