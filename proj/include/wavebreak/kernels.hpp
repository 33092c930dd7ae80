#pragma once

#include "wavebreak/field.hpp"

namespace wavebreak {

/// Whitham kernel K(x) = F^{-1}[sqrt(tanh(xi)/xi)](x) for x > 0, evaluated
/// through the decomposition
///   K(x) = 1/sqrt(2 pi x) - (1/pi) int_0^inf cos(x xi) (1 - sqrt(tanh xi)) / sqrt(xi) dxi,
/// whose correction integrand decays like e^{-2 xi}/sqrt(xi). Positive, even,
/// decreasing, and bounded by 1/sqrt(2 pi x).
double whitham_kernel(double x);

/// Bessel kernel of order s > 0:
///   G_s(x) = 1/(2 sqrt(pi) Gamma(s/2)) int_0^inf t^{(s-3)/2} e^{-x^2/(4t) - t} dt,
/// even in x. Computed after the substitution t = e^tau (double-exponential
/// integrand). x = 0 is allowed only for s > 1, where G_s(0) = gamma(s)/2.
double bessel_kernel(double s, double x);

/// Pointwise principal-value evaluation of the fractional source operator
/// at a grid point, alpha in (-1, 0):
///   N[g](x) = c_alpha int_0^inf [g(x+y) - g(x-y)] / y^{2+alpha} dy,
/// with the inner |y| <= eta part Taylor-regularized and the periodic images
/// of the kernel folded in so the value matches the Fourier-multiplier route
/// on the same grid. c_alpha is the normalization making the operator's
/// symbol equal to i xi |xi|^alpha.
double fractional_pv(const Field& g, double x, double alpha, double eta = 0.5);

/// The normalization constant c_alpha above: 1/(2 int_0^inf sin(t) t^{-2-alpha} dt).
double fractional_normalization(double alpha);

}  // namespace wavebreak
