#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "qrwell/quadrature.hpp"

namespace qrwell {

// All objects in this header describe the half-line scattering state with
// wavenumber mu > 0 and its use in trial modes for the confined problem:
//
//   F(x)     = sin(mu x + theta) - G(x)  on x > 0,  F = 0 on x <= 0,
//   G(x)     = ∫_1^∞ e^{-x r} gamma(r) dr   (completely monotone),
//   gamma(r) = (sqrt2/2pi) (mu/sqrt(1+mu^2)) sqrt(r^2-1)/(mu^2+r^2)
//              * exp(-(1/pi) ∫_0^∞ r log(1 + sqrt((1+s^2)/(1+mu^2)))/(r^2+s^2) ds).

// Spectral-density profile at fixed mu. Construction tabulates the exponent
// integral J(r) = ∫_0^∞ r log(...)/(r^2+s^2) ds as a Chebyshev series in
// log r (J is analytic there and asymptotically linear), after which density
// evaluations cost one Clenshaw recurrence instead of a quadrature.
// Immutable and shareable across threads once built.
class GProfile {
  public:
    explicit GProfile(double mu, const QuadratureConfig& cfg = profile_config());

    double mu() const { return mu_; }
    double theta() const { return theta_; }

    // Laplace density gamma(r), r > 1.
    double density(double r) const;

    // G(x) = ∫_1^∞ e^{-x r} gamma(r) dr, x > 0.
    double value(double x) const;

    // Boundary value G(0+); equals sin(theta). Stored from the identity,
    // cross-checked against the density integral in tests.
    double boundary_value() const { return g0_; }

    // I = ∫_1^∞ gamma(r)/r dr by direct quadrature.
    double integral() const;

    // The same quantity in closed form:
    //   (cos(theta) - sqrt((1 + sqrt(1+mu^2))/(2 sqrt(1+mu^2)))) / mu.
    double integral_closed_form() const;

    // ∫_1^∞ gamma(r) dr by direct quadrature (slowly converging; used to
    // validate boundary_value()).
    double mass_quadrature() const;

    // exponent integral J(r) for r >= 1 (Chebyshev-cached below r = e^41)
    double exponent(double r) const;

    static QuadratureConfig profile_config();

  private:
    double mu_ = 0.0;
    double theta_ = 0.0;
    double g0_ = 0.0;
    double prefactor_ = 0.0;     // (sqrt2/2pi) mu/sqrt(1+mu^2)
    double y_max_ = 0.0;         // Chebyshev domain is log r in [0, y_max]
    std::vector<double> cheb_;   // coefficients of J(e^y)
    QuadratureConfig cfg_;

    double density_cosh(double t) const;  // gamma(cosh t) * sinh t, smooth at 0
    friend double detail_density_cosh(const GProfile&, double);
};

// Shared, memoized profile for a given mu.
std::shared_ptr<const GProfile> profile(double mu);

// Free-function views of the profile quantities.
// gamma_mu evaluates the density directly from its defining quadrature
// (independent of the Chebyshev cache; used as the cache's oracle).
double gamma_mu(double mu, double r, const QuadratureConfig& cfg = GProfile::profile_config());
double G(double mu, double x);

// Dual-route value of I_mu: (quadrature, closed_form).
struct DualValue {
    double quadrature = 0.0;
    double closed_form = 0.0;
};
DualValue G_integral(double mu);

// Half-line generalized eigenfunction F(x).
double F(double mu, double x);

// Laplace transform of F. The closed form is
//   L F(xi) = (sqrt2/2) mu/(mu^2+xi^2)
//             * exp((1/pi) ∫_0^∞ xi log(1 + sqrt((1+s^2)/(1+mu^2)))/(xi^2+s^2) ds),
// valid for Re xi > 0; throws std::domain_error within 1e-6 of the poles
// xi = ±i mu (|mu^2 + xi^2| < 1e-12).
double laplace_F(double mu, double xi);
std::complex<double> laplace_F(double mu, std::complex<double> xi);

// Modulus bound C |mu/(mu^2+xi^2)| sqrt(1 + sqrt((1+|xi|^2)/(1+mu^2))) with
// C = sqrt2 for real xi, C = 2 for complex xi.
double laplace_F_bound(double mu, std::complex<double> xi);

// C^1 wall switch: q = 0 for x <= -b, 1 for x >= b, piecewise quadratic in
// between; q(x) + q(-x) = 1 and |q''| <= 1/b^2 where defined.
double bump_q(double x, double b);

// Trial mode for the confined problem at half-width a_bar:
//   phi_tilde_n(x) = q(-x) F(a_bar+x) - (-1)^n q(x) F(a_bar-x),
// with bump half-width b = a_bar/3 and F taken at mu = mu_tilde_n.
double phi_tilde(double a_bar, int n, double x);

// Interior comparison mode: a_bar^{-1/2} cos(mu_tilde x) (n odd) or
// a_bar^{-1/2} sin(mu_tilde x) (n even) on (-a_bar, a_bar), zero outside.
double f_n(double a_bar, int n, double x);

// Sandwich for ||phi_tilde_n||^2 from the closed-form I_mu:
//   a - sin(theta)/mu - 4 I  <=  ||phi||^2  <=  a + sin(theta)/mu + 4 I (1 + sin(theta)).
struct NormSquaredBounds {
    double lower = 0.0;
    double upper = 0.0;
};
NormSquaredBounds phi_tilde_norm_sq_bounds(double a_bar, int n);

// ||phi_tilde_n||_{L^2} by direct quadrature.
double phi_tilde_norm(double a_bar, int n, const QuadratureConfig& cfg = {});

// A named, evaluatable approximation to the n-th confined mode.
struct WaveApprox {
    enum class Kind { phi_tilde, interior, oracle };
    Kind kind = Kind::phi_tilde;
    int n = 0;
    double a_bar = 0.0;
    double mu_tilde = 0.0;
    std::function<double(double)> eval;
    double operator()(double x) const { return eval(x); }
};

// wave_phi_tilde divides by the numerical L^2 norm, so it can be compared
// directly with unit-norm modes; wave_interior keeps f_n's own scaling.
WaveApprox wave_phi_tilde(double a_bar, int n);
WaveApprox wave_interior(double a_bar, int n);

// A-priori accuracy guarantees for the n-th confined mode, in the units of
// PhysicalParams (see spectrum.hpp): l2_bound and l2_refined bound the L^2
// distance from the interior model f_n resp. the matched trial mode
// phi_tilde_n; sup_bound caps the amplitude of the normalized mode itself.
struct PhysicalParams;
struct EigenfunctionErrorBounds {
    double l2_bound = 0.0;   // sqrt(mc/hbar) min(10/sqrt(n), 55 hbar sqrt(n)/(m c a))
    double sup_bound = 0.0;  // 8 / sqrt(a)
    double l2_refined = 0.0; // 1.455 (1+a/3) sqrt(4a^2+pi^2) e^{-a/3} sqrt(a) / (n ||phi_tilde||)
};
EigenfunctionErrorBounds eigenfunction_error_bounds(const PhysicalParams& p, int n);

} // namespace qrwell
