#pragma once

#include "qrwell/quadrature.hpp"

namespace qrwell {

// Modified Bessel function K1(x) for x > 0.
// Ascending series below x = 2, Chebyshev fits of sqrt(x) e^x K1(x) above.
// Relative accuracy ~1e-15 over [1e-6, 700]; underflows to 0 for x beyond
// the representable range of e^{-x}. Throws std::domain_error for x <= 0.
double bessel_k1(double x);

// Jump density of the relativistic kinetic operator: nu(z) = K1(|z|)/(pi |z|).
// Symmetric, positive, singular like 1/(pi z^2) at the origin.
// Throws std::domain_error at z = 0.
double nu(double z);

// Truncated second moment nu0(x) = ∫_0^x z^2 nu(z) dz, x > 0.
// The integrand z K1(z)/pi is evaluated by its limit 1/pi below z = 1e-8.
double nu0(double x, const QuadratureConfig& cfg = {});

// Tail mass nu_inf(x) = ∫_x^∞ nu(z) dz, x > 0.
double nu_inf(double x, const QuadratureConfig& cfg = {});

// Decay weight u(x) = (1 + x) e^{-x}, the envelope appearing in the kernel
// and boundary-layer estimates.
double u(double x);

} // namespace qrwell
