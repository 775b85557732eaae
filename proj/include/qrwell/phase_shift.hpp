#pragma once

#include "qrwell/quadrature.hpp"

namespace qrwell {

// Scattering phase shift theta(mu) of the half-line problem, mu > 0.
//
// Three independent evaluation routes are provided:
//   * theta / theta_value  - regularized single integral over s in (0,1)
//                            (primary route, memoized),
//   * theta_pv             - principal-value integral over s in (0, inf)
//                            (cross-check route),
//   * theta_from_derivative- closed-form derivative integrated up from a
//                            small-mu anchor (cross-check route).
// All routes agree to ~1e-9 or better; tests pin them against each other.

struct PhaseShiftEval {
    double mu = 0.0;
    double theta = 0.0;        // phase shift, strictly inside theta_bounds
    double dtheta_dmu = 0.0;   // closed-form derivative, strictly positive
};

struct ThetaBounds {
    double lower = 0.0;  // max(0, pi/8 - 2/(pi mu))
    double upper = 0.0;  // min(2 mu / pi, pi/8)
};

// Tolerance used for the phase-shift quadratures unless overridden.
QuadratureConfig theta_default_config();

// Primary route. Results are memoized per (mu, abs_tol); the cache is
// thread-safe. Throws std::domain_error for mu <= 0 and ConsistencyError if
// the computed value escapes its rigorous bracket by more than the
// quadrature error estimate.
PhaseShiftEval theta(double mu);
PhaseShiftEval theta(double mu, const QuadratureConfig& cfg);
double theta_value(double mu);

// Principal-value route (no memoization).
double theta_pv(double mu, const QuadratureConfig& cfg = theta_default_config());

// d theta / d mu in closed form:
//   (1/pi) 1/(mu(1+mu^2)) log((1+mu+sqrt(1+mu^2))/(1-mu+sqrt(1+mu^2))).
double theta_derivative(double mu);

// Third route: theta(mu0) from the small-mu expansion plus the integral of
// theta_derivative over (mu0, mu). Exposed for validation.
double theta_from_derivative(double mu, const QuadratureConfig& cfg = theta_default_config());

// Two-term expansions at the ends of the range:
//   small: mu/pi - 7 mu^3/(18 pi)
//   large: pi/8 - (1 + 2 log(2 mu))/(4 pi mu^2)
double theta_asymptotic_small(double mu);
double theta_asymptotic_large(double mu);

// Rigorous enclosure max(0, pi/8 - 2/(pi mu)) <= theta <= min(2mu/pi, pi/8).
ThetaBounds theta_bounds(double mu);

} // namespace qrwell
