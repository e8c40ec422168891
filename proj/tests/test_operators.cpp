#include <doctest.h>

#include "dunkl/operators.hpp"

#include <cmath>

using namespace dunkl;
using doctest::Approx;

namespace {
ScalarField chi(double r) {
    ScalarField f = make_real_field([r](double x) { return std::abs(x) < r ? 1.0 : 0.0; }, Parity::even);
    f.support_radius = r;
    f.smoothness = Smoothness::piecewise;
    return f;
}
}  // namespace

TEST_CASE("Bessel-Riesz oracles at the origin") {
    const auto p = make_params(0.0);
    QuadSpec q;
    CHECK(bessel_riesz_apply(p, 1.0, 1.0, chi(1.0), 0.0, q) == Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(bessel_riesz_apply(p, 1.0, 0.0, chi(1.0), 0.0, q) == Approx(1.0).epsilon(1e-10));
    CHECK(bessel_riesz_apply(p, 1.0, 1.0, zero_field(), 0.7, q) == 0.0);
}

TEST_CASE("operator forms agree") {
    const auto p = make_params(0.5);
    QuadSpec q;
    const auto f = make_real_field([](double x) { return std::exp(-x * x); }, Parity::even);
    const auto k = KernelSpec::bessel_riesz(p, 1.5, 1.0);
    for (double x : {0.0, 0.8, 2.0}) {
        CHECK(kernel_apply(p, k, f, x, q) == Approx(kernel_apply_adjoint(p, k, f, x, q)).epsilon(1e-6));
    }
}

TEST_CASE("power-law reductions") {
    const auto p = make_params(0.0);
    QuadSpec q;
    const auto f = chi(1.0);
    const double br = bessel_riesz_apply(p, 1.0, 0.5, f, 0.6, q);
    CHECK(generalized_bessel_riesz_apply(p, GrowthFunction::power(1.0, -1.0), 0.5, f, 0.6, q) ==
          Approx(br).epsilon(1e-10));
    CHECK(fractional_apply(p, GrowthFunction::power(1.0, 1.0), f, 0.6, q) ==
          Approx(bessel_riesz_apply(p, 1.0, 0.0, f, 0.6, q)).epsilon(1e-10));
    std::vector<std::string> warnings;
    CHECK(fractional_apply(p, GrowthFunction::power(1.0, 2.5), f, 0.6, q, &warnings) > 0.0);
    CHECK(warnings.empty());
    // the condition is checked before any integration
    CHECK(fractional_apply(p, GrowthFunction::power(1.0, 0.0), zero_field(), 0.6, q, &warnings) == 0.0);
    CHECK(warnings.size() == 1);
}

TEST_CASE("modified fractional integral of 1") {
    const auto p = make_params(0.0);
    QuadSpec q;
    CHECK(modified_fractional_apply(p, GrowthFunction::power(1.0, 0.5), constant_field(1.0), 0.0, q) ==
          Approx(2.0).epsilon(1e-8));
    const auto one = make_real_field([](double) { return 1.0; }, Parity::even);
    CHECK(modified_fractional_apply(p, GrowthFunction::power(1.0, 0.5), one, 0.0, q) == Approx(2.0).epsilon(1e-8));
}

TEST_CASE("maximal function") {
    const auto p = make_params(0.0);
    QuadSpec q;
    SupGrid g;
    CHECK(maximal(p, constant_field(1.0), 3.0, g, q) == 1.0);
    const auto one = make_real_field([](double) { return 1.0; }, Parity::even);
    CHECK(maximal(p, one, 3.0, g, q) == Approx(1.0).epsilon(1e-10));
    const auto f = chi(1.0);
    const auto v = maximal_values(p, f, {0.0, 0.5, 3.0}, g, q);
    CHECK(v[0] == Approx(1.0).epsilon(1e-10));
    CHECK(v[1] >= 1.0 - 1e-10);
    CHECK(v[2] < 1.0);
    CHECK(v[2] > 0.0);
    const auto r = maximal_radii(g, 10.0);
    CHECK(r.back() >= 44.0);
    CHECK(operator_nodes(true).front() == 0.0);
    CHECK(operator_nodes(false).front() < 0.0);
}
