#pragma once

#include <optional>
#include <vector>

#include "qrwell/quadrature.hpp"

namespace qrwell {

// Physical description of the confined particle: interval half-width a,
// particle mass m, and the usual constants. m = 0 is allowed only for the
// massless helpers; everything else requires m > 0.
struct PhysicalParams {
    double hbar = 1.0;
    double c = 1.0;
    double m = 1.0;
    double a = 1.0;
};

// Everything internal works in natural units: lengths in hbar/(m c),
// energies in m c^2. The dimensionless half-width is a_bar = m c a / hbar.
struct NaturalParams {
    double a_bar = 1.0;
};

NaturalParams to_natural(const PhysicalParams& p);
double energy_to_physical(double e_natural, const PhysicalParams& p);

enum class Parity { even, odd };

// Kinetic dispersion w(xi) = sqrt(xi + 1) - 1, evaluated cancellation-free.
double w_dispersion(double xi);

// Unique root mu_tilde_n of  a_bar * mu + theta(mu) = n pi / 2  inside the
// bracket ((n pi/2 - pi/8)/a_bar, (n pi/2)/a_bar). Solved to |f| < 1e-12 by
// a bracketed bisection/secant hybrid; bracket failure throws
// ConsistencyError, iteration exhaustion throws ConvergenceError.
double solve_mu_tilde(double a_bar, int n);

// Two-sided refinement of the bracket:
//   lower = (n pi/2 - theta(n pi/(2 a_bar))) / a_bar
//   upper = lower + min(8n/(pi a_bar), 1) / (4 a_bar^2 + pi^2 (n - 1/4)^2)
struct MuTildeBounds {
    double lower = 0.0;
    double upper = 0.0;
};
MuTildeBounds mu_tilde_refined_bounds(double a_bar, int n);

// Everything the toolkit can say about mode n at half-width a_bar, in
// natural units (energies in units of m c^2).
struct ModeEstimate {
    int n = 0;
    double mu_tilde = 0.0;       // interior wavenumber
    double E_tilde = 0.0;        // sqrt(mu_tilde^2 + 1)
    double lambda_tilde = 0.0;   // E_tilde - 1 (kinetic part)
    double err_simple = 0.0;     // |E_n - E_tilde| <= (8/n)(3 + 1/a_bar) e^{-a_bar/3}
    std::optional<double> err_refined;  // sharper bound, defined when mu_tilde*a_bar > 1.251
    double residual_norm_bound = 0.0;   // ||A phi - lambda phi|| bound for the trial mode
    double cs2_lower = 0.0;      // sqrt(((n-1)pi/(2 a_bar))^2 + 1) < E_n
    double cs2_upper = 0.0;      // E_n <= sqrt((n pi/(2 a_bar))^2 + 1)
    double weyl2 = 0.0;          // two-term counting estimate sqrt(((n pi/2 - pi/8)/a_bar)^2 + 1)
    Parity parity = Parity::even;  // even for odd n, odd for even n
};

ModeEstimate mode_estimate(double a_bar, int n);

// Crude operator-inequality enclosure
//   (sqrt((n pi/(2a))^2 + 1) + 1)/2 <= E_n <= sqrt((n pi/(2a))^2 + 1).
struct EnergyBounds {
    double lower = 0.0;
    double upper = 0.0;
};
EnergyBounds cs1_bounds(double a_bar, int n);

// Fully explicit estimate requiring only one phase-shift evaluation:
//   value = m c^2 sqrt((n pi/2 - theta(n pi/(2 a_bar)))^2 / a_bar^2 + 1),
//   |E_n - value| < bound = 12 hbar c / (n a).
struct ExplicitEstimate {
    double value = 0.0;
    double bound = 0.0;
};
ExplicitEstimate explicit_estimate(const PhysicalParams& p, int n);

// Same estimate for the kinetic part E_n - m c^2 with the sharper two-term
// bound (m c^2/(n a_bar)) (7.309 (1 + a_bar/3) e^{-a_bar/3}
//                           + 4.443 n^3 a_bar/(n + a_bar)^4).
ExplicitEstimate explicit_estimate_refined(const PhysicalParams& p, int n);

// Nonrelativistic limit m c^2 + (n pi hbar / (2a))^2 / (2m).
double nonrelativistic_limit(const PhysicalParams& p, int n);

// Massless limit: value (n pi/2 - pi/8) hbar c / a, |E_n - value| <= 8 hbar c/(a n).
ExplicitEstimate massless_limit(const PhysicalParams& p, int n);

// Certified enclosure I_n = (lambda_tilde_n - eps_n, lambda_tilde_n + eps_n)
// for the n-th kinetic eigenvalue, n >= 3 (kinetic = E - 1, natural units).
struct SpectralInterval {
    int n = 0;
    double center = 0.0;
    double half_width = 0.0;
};

struct SpectralIntervalReport {
    std::vector<SpectralInterval> intervals;  // n = 3 .. n_max
    bool pairwise_disjoint = false;
    double lambda2_upper = 0.0;     // w(pi^2/a_bar^2) >= lambda_2
    bool separated_from_below = false;  // center_3 - half_width_3 > lambda2_upper
};
SpectralIntervalReport spectral_intervals(double a_bar, int n_max);

// Upper bound (2 a_bar/pi) ∫_0^∞ e^{-t w(s^2)} ds on the kinetic heat trace
// Σ_j e^{-lambda_j t}, t > 0.
double heat_trace_upper(double a_bar, double t, const QuadratureConfig& cfg = {});

// Over-estimate of the same trace assembled from the certified mode
// enclosures: Σ e^{-t max(0, lambda_tilde_n - err_n)} truncated once terms
// drop below 1e-13, plus a geometric closure of the tail. Dominates the true
// trace, so heat_trace_upper must dominate this too.
double heat_trace_estimate(double a_bar, double t);

// Dirichlet-comparison upper bound for the n-th kinetic eigenvalue within a
// parity sector: even sector <= w(((n pi - pi/2)/a_bar)^2),
//                odd sector  <= w((n pi / a_bar)^2).
double parity_kinetic_upper(Parity sector, int n, double a_bar);

} // namespace qrwell
