#pragma once

#include "dunkl/core.hpp"
#include "dunkl/field.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/quadrature.hpp"

#include <string>
#include <vector>

namespace dunkl {

/// Radii over which the maximal function at x is maximised: the grid
/// lattice, continued past r_max (same spacing) until the ball B(0, r)
/// reaches 4 (|x| + 1).
std::vector<double> maximal_radii(const SupGrid& grid, double x);

/// M f(x) = max over maximal_radii of mu(B(0,r))^{-1} int_{B(0,r)} tau_x |f| dmu.
/// A lower bound of the true supremum. Exactly |c| for constant f.
double maximal(const DunklParams& params, const ScalarField& f, double x, const SupGrid& grid,
               const QuadSpec& quad);
/// M f at several points, sharing one cumulative table of |f|.
std::vector<double> maximal_values(const DunklParams& params, const ScalarField& f, const std::vector<double>& xs,
                                   const SupGrid& grid, const QuadSpec& quad);
/// Sample points used when tabulating an operator output: 0 and
/// 2^{-10} .. 2^{12} at 4 per octave, plus `extra`. Negative copies are
/// added when `even` is false.
std::vector<double> operator_nodes(bool even, const std::vector<double>& extra = {});
/// M f sampled on operator_nodes and interpolated.
TabulatedField maximal_field(const DunklParams& params, const ScalarField& f, const SupGrid& grid,
                             const QuadSpec& quad);

/// int f(y) tau_x K(y) dmu(y), outer quadrature over y.
double kernel_apply(const DunklParams& params, const KernelSpec& kernel, const ScalarField& f, double x,
                    const QuadSpec& quad);
/// int tau_{-x} f(y) K(y) dmu(y), the form used in the boundedness proofs.
double kernel_apply_adjoint(const DunklParams& params, const KernelSpec& kernel, const ScalarField& f, double x,
                            const QuadSpec& quad);

/// I_{beta,gamma} f(x).
double bessel_riesz_apply(const DunklParams& params, double beta, double gamma, const ScalarField& f, double x,
                          const QuadSpec& quad);
/// I_{rho~,gamma} f(x). When `warnings` is given, the integrability
/// condition on rho~ is checked and a failure is appended there.
double generalized_bessel_riesz_apply(const DunklParams& params, const GrowthFunction& rho_tilde, double gamma,
                                      const ScalarField& f, double x, const QuadSpec& quad,
                                      std::vector<std::string>* warnings = nullptr);
/// T_rho f(x), with the same optional condition check on rho.
double fractional_apply(const DunklParams& params, const GrowthFunction& rho, const ScalarField& f, double x,
                        const QuadSpec& quad, std::vector<std::string>* warnings = nullptr);
/// T~_rho f(x) = int f(y) (tau_x K(y) - K(y) 1{|y| >= 1}) dmu(y) with K = rho(|y|)/|y|^d.
/// Throws AccuracyError when the tail does not converge.
double modified_fractional_apply(const DunklParams& params, const GrowthFunction& rho, const ScalarField& f,
                                 double x, const QuadSpec& quad);

}  // namespace dunkl
