#include <doctest.h>

#include "dunkl/errors.hpp"
#include "dunkl/verify.hpp"

#include <cmath>
#include <limits>

using namespace dunkl;
using doctest::Approx;

namespace {
SuiteOptions quick() {
    SuiteOptions o;
    o.grid.r_min = 1.0 / 16.0;
    o.grid.r_max = 16.0;
    o.grid.points_per_octave = 2;
    o.grid.x_min = -4.0;
    o.grid.x_max = 4.0;
    o.grid.x_points = 9;
    return o;
}
}  // namespace

TEST_CASE("corpus") {
    const auto c = default_corpus();
    CHECK(c.size() == 10);
    CHECK(corpus_with_tag(c, "bmo").size() == 3);
    CHECK(corpus_with_tag(c, "dilates").size() == 5);
    CHECK(corpus_with_tag(c, "singular").size() == 2);
    const auto s = corpus_subset(c, {"bump", "chi1"});
    CHECK(s[0].name == "bump");
    CHECK(s[1].field(0.5).real() == 1.0);
    CHECK_THROWS_AS(corpus_subset(c, {"nope"}), DomainError);
    // smooth cut-off of log|x|
    const auto& lc = corpus_subset(c, {"log_cut"})[0].field;
    CHECK(lc.real(2.0) == Approx(std::log(2.0)));
    CHECK(lc.real(9.0) == 0.0);
    CHECK(lc.real(0.0) == 0.0);
}

TEST_CASE("report serialisation round trips") {
    RatioReport r;
    r.suite_id = "demo";
    r.rows.push_back({"f", R"({"a":1,"s":"x,\"y\""})", 1.0 / 3.0, 0.0, std::numeric_limits<double>::infinity()});
    r.rows.push_back({"g,h", R"({})", 0.1, 0.2, 0.5});
    r.rows.push_back({"n", R"({})", std::nan(""), 1.0, std::nan("")});
    r.empirical_sup = std::numeric_limits<double>::infinity();
    r.fitted_constant = 0.5;
    r.refined_sup = 0.25;
    r.notes = {"one", "two"};
    r.quad.tail_cutoff = 100.0;
    CHECK(report_from_json(report_to_json(r)) == r);
    const auto back = report_from_csv(report_to_csv(r));
    CHECK(back.suite_id == "demo");
    REQUIRE(back.rows.size() == r.rows.size());
    CHECK(back.rows[0] == r.rows[0]);
    CHECK(back.rows[1] == r.rows[1]);
    CHECK(std::isnan(back.rows[2].ratio));
    CHECK(report_to_csv(r).substr(0, 42) == "suite_id,function,param_json,lhs,rhs,ratio");
    CHECK_THROWS_AS(report_from_csv("a,b\n"), DomainError);
    CHECK_THROWS_AS(report_from_json("{"), DomainError);
}

TEST_CASE("exponent bookkeeping and windows") {
    const auto p = make_params(0.0);
    BesselRieszSetup s;
    const auto t = bessel_riesz_t_exponents(p, s);
    CHECK(t.q == Approx(3.6));
    CHECK(t.t_prime == Approx(3.0));
    CHECK(t.psi.exponent() == Approx(-1.5 * 2.0 / 3.6));
    CHECK(bessel_riesz_st_exponents(p, s).q == Approx(3.6));
    CHECK(bessel_riesz_omega_exponents(p, s).q == Approx(6.0));
    BesselRieszSetup bad = s;
    bad.t = 2.5;
    CHECK_THROWS_WITH_AS(bessel_riesz_t_exponents(p, bad), doctest::Contains("t <"), DomainError);
    bad = s;
    bad.nu = -0.5;
    CHECK_THROWS_AS(bessel_riesz_t_exponents(p, bad), DomainError);
    bad = s;
    bad.omega = GrowthFunction::power(1.0, -2.0);
    CHECK_THROWS_WITH_AS(bessel_riesz_omega_exponents(p, bad), doctest::Contains("omega"), DomainError);

    GeneralizedSetup g;
    CHECK(generalized_q(p, g.phi, g) == Approx(6.0));
    g.which = "bessel_riesz_eq34";
    g.rho = GrowthFunction::power(1.0, -1.0);
    g.gamma = 0.5;
    CHECK(generalized_q(p, g.phi, g) == Approx(3.0));
}

TEST_CASE("preconditions name the condition") {
    const auto p = make_params(0.0);
    GeneralizedSetup g;
    g.rho = GrowthFunction::power(1.0, 2.5);
    g.q = 6.0;
    CHECK_THROWS_WITH_AS(verify_generalized_ops(p, g, {}, quick()), doctest::Contains("eq41"), DomainError);
    BmoSetup b;
    b.rho = GrowthFunction::power(1.0, 1.5);
    CHECK_THROWS_WITH_AS(verify_bmo(p, b, {}, quick()), doctest::Contains("eq"), DomainError);
}

TEST_CASE("tolerance suites") {
    SuiteOptions o = quick();
    const auto sf = verify_special_functions(o);
    CHECK(sf.pass);
    CHECK_FALSE(sf.refined_sup);
    const auto kn = verify_kernel_norms(make_params(0.0), 1.0, 1.0, 1.5, o);
    CHECK(kn.pass);
}

TEST_CASE("stability suite, determinism and homogeneity") {
    const auto p = make_params(0.0);
    auto corpus = corpus_subset(default_corpus(), {"chi1"});
    SuiteOptions o = quick();
    clear_operator_cache();
    const auto a = verify_maximal_strong(p, 2.0, corpus, o);
    clear_operator_cache();
    const auto b = verify_maximal_strong(p, 2.0, corpus, o);
    CHECK(a.pass);
    CHECK(report_to_json(a) == report_to_json(b));
    REQUIRE(a.refined_sup);

    // rescaling the function leaves the ratio unchanged
    Corpus scaled_corpus{{"chi1", scaled(corpus[0].field, 7.0), {}}};
    clear_operator_cache();
    const auto c = verify_maximal_strong(p, 2.0, scaled_corpus, o);
    CHECK(c.rows[0].ratio == Approx(a.rows[0].ratio).epsilon(1e-10));
}

TEST_CASE("run_suite dispatch") {
    SuiteOptions o = quick();
    o.dry_run = true;
    CHECK(run_suite("special_functions", nlohmann::json::object(), o).pass);
    CHECK_THROWS_WITH_AS(run_suite("plancherel", {{"bogus", 1}}, o), doctest::Contains("bogus"), DomainError);
    CHECK_THROWS_WITH_AS(run_suite("maximal_morrey", {{"phi", "pow:C=1,q=1"}}, o), doctest::Contains("phi"),
                         DomainError);
    CHECK_THROWS_AS(run_suite("nope", nlohmann::json::object(), o), DomainError);
    CHECK(suite_names().size() == 14);
}
