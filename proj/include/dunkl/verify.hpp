#pragma once

#include "dunkl/core.hpp"
#include "dunkl/field.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dunkl {

struct CorpusEntry {
    std::string name;
    ScalarField field;
    std::vector<std::string> tags;  ///< smooth, indicator, singular, bmo, dilates
    bool has_tag(const std::string& tag) const;
};
using Corpus = std::vector<CorpusEntry>;

/// gaussian, chi1, chi4, trunc_power, log_cut and the bump dilates
/// bump_m2, bump_m1, bump, bump_p1, bump_p2 (bump(2^j x), j = -2..2).
Corpus default_corpus();
/// Entries carrying `tag`.
Corpus corpus_with_tag(const Corpus& corpus, const std::string& tag);
/// Entries with the given names, in the given order. Throws DomainError on unknown names.
Corpus corpus_subset(const Corpus& corpus, const std::vector<std::string>& names);

struct RatioRow {
    std::string function;
    std::string param_json;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool operator==(const RatioRow&) const = default;
};

/// Outcome of a suite. `empirical_sup` is the largest row ratio on the base
/// grid and `refined_sup` the same after one refinement step (points per
/// octave doubled, quadrature tolerances divided by 10).
struct RatioReport {
    std::string suite_id;
    std::vector<RatioRow> rows;
    double empirical_sup = 0.0;
    double fitted_constant = 0.0;
    std::optional<double> refined_sup;
    bool pass = false;
    SupGrid grid;
    QuadSpec quad;
    std::vector<std::string> notes;
    bool operator==(const RatioReport& other) const;
};

std::string report_to_json(const RatioReport& report);
RatioReport report_from_json(const std::string& text);
/// Header suite_id,function,param_json,lhs,rhs,ratio; numbers as %.17g.
std::string report_to_csv(const RatioReport& report);
/// Rows (and the suite id) of a CSV report.
RatioReport report_from_csv(const std::string& text);

struct SuiteOptions {
    SupGrid grid;
    QuadSpec quad = default_suite_quad();
    bool refine = true;
    int jobs = 1;
    /// Validate parameters and windows only; the report has no rows.
    bool dry_run = false;
    static QuadSpec default_suite_quad();
};

/// E_{-1/2} against the exponential, J_{1/2} and J_{-1/2} against sinh z / z and cosh z.
RatioReport verify_special_functions(const SuiteOptions& opts);
/// ||F f||_2 / ||f||_2 for each entry and alpha.
RatioReport verify_plancherel(const std::vector<double>& alphas, const Corpus& corpus, const SuiteOptions& opts);
/// tau_0 f = f, symmetry, L^p bounds and the indicator bounds.
RatioReport verify_translation(const DunklParams& params, const Corpus& corpus, const SuiteOptions& opts);
/// F(tau_x f) = E F f, F(f * g) = F f F g and inversion.
RatioReport verify_transform_identities(const DunklParams& params, const SuiteOptions& opts);
/// Quadrature against dyadic L^t norms of the Bessel-Riesz kernel.
RatioReport verify_kernel_norms(const DunklParams& params, double beta, double gamma, double t,
                                const SuiteOptions& opts);

/// ||M f||_p / ||f||_p.
RatioReport verify_maximal_strong(const DunklParams& params, double p, const Corpus& corpus,
                                  const SuiteOptions& opts);
/// s mu{M f > s} / ||f||_1 for s = 2^{-4..4}.
RatioReport verify_maximal_weak(const DunklParams& params, const Corpus& corpus, const SuiteOptions& opts);
/// ||M f||_{p,phi} / ||f||_{p,phi}.
RatioReport verify_maximal_morrey(const DunklParams& params, double p, const GrowthFunction& phi,
                                  const Corpus& corpus, const SuiteOptions& opts);

struct BesselRieszSetup {
    double beta = 1.0;
    double gamma = 1.0;
    double p = 2.0;
    double nu = -1.5;
    double t = 1.5;
    double s = 1.2;
    GrowthFunction omega = GrowthFunction::power(1.0, -1.0);
};
/// Exponent bookkeeping: q, t' and the growth functions phi = r^nu, psi = phi^{p/q}.
struct BesselRieszExponents {
    double q = 0.0;
    double t_prime = 0.0;
    GrowthFunction phi;
    GrowthFunction psi;
};
/// Validates the windows of the L^t bound. Throws DomainError naming the
/// violated inequality.
BesselRieszExponents bessel_riesz_t_exponents(const DunklParams& params, const BesselRieszSetup& setup);
/// Same for the L^{s,t} bound (adds 1 <= s <= t and the s-window).
BesselRieszExponents bessel_riesz_st_exponents(const DunklParams& params, const BesselRieszSetup& setup);
/// q = nu p / (nu + d - beta) with nu < -beta < -d - nu and the omega bracket.
BesselRieszExponents bessel_riesz_omega_exponents(const DunklParams& params, const BesselRieszSetup& setup);

RatioReport verify_bessel_riesz_t(const DunklParams& params, const BesselRieszSetup& setup, const Corpus& corpus,
                                  const SuiteOptions& opts);
RatioReport verify_bessel_riesz_st(const DunklParams& params, const BesselRieszSetup& setup, const Corpus& corpus,
                                   const SuiteOptions& opts);
RatioReport verify_bessel_riesz_omega(const DunklParams& params, const BesselRieszSetup& setup,
                                      const Corpus& corpus, const SuiteOptions& opts);

struct GeneralizedSetup {
    std::string which = "fractional_eq38";  ///< or bessel_riesz_eq34
    GrowthFunction rho = GrowthFunction::power(1.0, 1.0);  ///< rho, or rho~ for eq34
    double gamma = 0.0;
    double p = 2.0;
    std::optional<double> q;  ///< default nu p / (nu + beta) or nu p / (nu + beta - gamma)
    GrowthFunction phi = GrowthFunction::power(1.0, -1.5);
};
/// q for the setup (explicit or from the power-law formula).
double generalized_q(const DunklParams& params, const GrowthFunction& phi, const GeneralizedSetup& setup);
/// ||Op f||_{q,psi} / ||f||_{p,phi}; also compares each row with the
/// matching Bessel-Riesz kernel when rho is a pure power.
RatioReport verify_generalized_ops(const DunklParams& params, const GeneralizedSetup& setup, const Corpus& corpus,
                                   const SuiteOptions& opts);

struct BmoSetup {
    GrowthFunction rho = GrowthFunction::power(1.0, 0.5);
    GrowthFunction phi = GrowthFunction::power(1.0, 0.0);
    GrowthFunction psi = GrowthFunction::power(1.0, 0.5);
};
/// ||T~ f||_{BMO_psi} / ||f||_{BMO_phi} on the given entries.
RatioReport verify_bmo(const DunklParams& params, const BmoSetup& setup, const Corpus& corpus,
                       const SuiteOptions& opts);
/// Pointwise kernel bounds for 2|x| <= |y| and the averaged oscillation bound.
RatioReport verify_pointwise_lemmas(const DunklParams& params, const BmoSetup& setup, const Corpus& corpus,
                                    const SuiteOptions& opts);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();
/// Runs a suite by name. `config` holds the suite parameters (keys as in
/// the setup structs, growth functions in text form) plus optional
/// "alpha", "alphas" and "functions". Unknown keys are rejected.
RatioReport run_suite(const std::string& name, const nlohmann::json& config, const SuiteOptions& opts);

/// Drops all cached operator tables.
void clear_operator_cache();

}  // namespace dunkl
