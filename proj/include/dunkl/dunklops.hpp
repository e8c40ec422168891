#pragma once

#include "dunkl/core.hpp"
#include "dunkl/field.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"

#include <complex>
#include <vector>

namespace dunkl {

/// Samples of the Dunkl transform at increasing frequencies.
struct SampledSpectrum {
    std::vector<double> lambdas;
    std::vector<std::complex<double>> values;
    DunklParams params;
};

/// F f(lambda) = int E(-i lambda x) f(x) dmu(x).
std::complex<double> transform_at(const DunklParams& params, const ScalarField& f, double lambda,
                                  const QuadSpec& spec);
SampledSpectrum transform(const DunklParams& params, const ScalarField& f, const std::vector<double>& lambdas,
                          const QuadSpec& spec);
/// lambda -> F f(lambda), evaluated lazily by quadrature.
ScalarField spectrum_field(const DunklParams& params, const ScalarField& f, const QuadSpec& spec);

/// x -> int g(lambda) E(i lambda x) dmu(lambda) at each x.
std::vector<std::complex<double>> inverse_transform(const DunklParams& params, const ScalarField& g,
                                                    const std::vector<double>& xs, const QuadSpec& spec);

/// tau_x f(y). At alpha = -1/2 this is f(x + y).
std::complex<double> translate(const DunklParams& params, const ScalarField& f, double x, double y,
                               const QuadSpec& spec);
/// Real part of tau_x f(y); the imaginary part of f is ignored.
double translate_real(const DunklParams& params, const ScalarField& f, double x, double y, const QuadSpec& spec);

/// tau_x K(y) for a radial kernel. Throws DomainError where the value is
/// infinite (y = x or y = -x with a non-integrable local exponent).
double translate_kernel(const DunklParams& params, const KernelSpec& kernel, double x, double y,
                        const QuadSpec& spec);
/// tau_x K(y) - K(y), computed without cancellation. Requires y != 0.
double translate_kernel_difference(const DunklParams& params, const KernelSpec& kernel, double x, double y,
                                   const QuadSpec& spec);

/// Radii |y| where y -> tau_x f(y) is not smooth, with the local behaviour.
/// The support bound |x| + S (if any) is the last entry.
std::vector<Breakpoint> translation_breakpoints(const DunklParams& params, const ScalarField& f, double x);

/// y -> tau_x f(y) as a field, each evaluation a quadrature.
ScalarField translated_field(const DunklParams& params, const ScalarField& f, double x, const QuadSpec& spec);

/// f * g(x) = int f(y) tau_x g(-y) dmu(y). For even g this equals the
/// literal form int f(y) tau_y g(x) dmu(y) evaluated at -x.
std::complex<double> convolve(const DunklParams& params, const ScalarField& f, const ScalarField& g, double x,
                              const QuadSpec& spec);
/// Real-valued fields only.
double convolve_real(const DunklParams& params, const ScalarField& f, const ScalarField& g, double x,
                     const QuadSpec& spec);

}  // namespace dunkl
