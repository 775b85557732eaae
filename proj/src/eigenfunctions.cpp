#include "qrwell/eigenfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qrwell/phase_shift.hpp"
#include "qrwell/spectrum.hpp"

namespace qrwell {

namespace {

constexpr double pi = 3.14159265358979323846;

// J(r) = ∫_0^∞ r log(1 + sqrt((1+s^2)/(1+mu^2)))/(r^2+s^2) ds, computed with
// the substitution s = r tan(phi):
//   J(r) = ∫_0^{pi/2} log(1 + sqrt((1 + r^2 tan^2 phi)/(1+mu^2))) dphi.
// The integrand grows like -log(pi/2 - phi) at the right end; the breakpoints
// let the adaptive rule dispose of that mild singularity quickly.
double exponent_direct(double mu, double r, const QuadratureConfig& cfg) {
    const double m2 = 1.0 + mu * mu;
    auto f = [r, m2](double phi) {
        const double x = r * std::tan(phi);
        return std::log1p(std::sqrt((1.0 + x * x) / m2));
    };
    const std::vector<double> breaks = {0.0,
                                        0.25 * pi,
                                        0.5 * pi - 1e-2,
                                        0.5 * pi - 1e-5,
                                        0.5 * pi - 1e-8,
                                        0.5 * pi - 1e-11,
                                        0.5 * pi};
    Integral J = integrate(f, breaks, cfg);
    if (!J.converged)
        throw ConvergenceError("exponent integral J(r) did not converge");
    return J.value;
}

double clenshaw(const std::vector<double>& a, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = a.size(); k-- > 1;) {
        const double b0 = 2.0 * t * b1 - b2 + a[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + a[0];
}

} // namespace

QuadratureConfig GProfile::profile_config() {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-12;
    cfg.max_subdivisions = 4000;
    return cfg;
}

GProfile::GProfile(double mu, const QuadratureConfig& cfg) : mu_(mu), cfg_(cfg) {
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::domain_error("GProfile: mu must be positive and finite");
    theta_ = theta_value(mu);
    g0_ = std::sin(theta_);
    prefactor_ = (std::sqrt(2.0) / (2.0 * pi)) * mu / std::sqrt(1.0 + mu * mu);

    // Chebyshev table of y -> J(e^y) on [0, y_max]. J(e^y) is analytic in a
    // strip of half-width pi/2 (the integrand's branch points sit on the
    // imaginary r-axis), so ~480 coefficients reach full double precision.
    y_max_ = 41.0;
    const int n = 480;
    std::vector<double> vals(n);
    for (int k = 0; k < n; ++k) {
        const double t = std::cos(pi * (k + 0.5) / n);     // Chebyshev point
        const double y = 0.5 * y_max_ * (t + 1.0);
        vals[k] = exponent_direct(mu_, std::exp(y), cfg_);
    }
    cheb_.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
            s += vals[k] * std::cos(pi * j * (k + 0.5) / n);
        cheb_[j] = 2.0 * s / n;
    }
    cheb_[0] *= 0.5;
    // Drop the fully converged tail of the series.
    double scale = 0.0;
    for (double a : cheb_) scale = std::max(scale, std::fabs(a));
    std::size_t keep = cheb_.size();
    while (keep > 8 && std::fabs(cheb_[keep - 1]) < 1e-16 * scale &&
           std::fabs(cheb_[keep - 2]) < 1e-16 * scale)
        --keep;
    cheb_.resize(keep);
}

double GProfile::exponent(double r) const {
    if (!(r >= 1.0))
        throw std::domain_error("GProfile::exponent: requires r >= 1");
    const double y = std::log(r);
    if (y > y_max_)
        return exponent_direct(mu_, r, cfg_);
    return clenshaw(cheb_, 2.0 * y / y_max_ - 1.0);
}

double GProfile::density(double r) const {
    if (!(r > 1.0))
        throw std::domain_error("GProfile::density: requires r > 1");
    const double s = std::sqrt((r - 1.0) * (r + 1.0));
    return prefactor_ * s / (mu_ * mu_ + r * r) * std::exp(-exponent(r) / pi);
}

// gamma(cosh t) sinh t: the natural variable for every ∫_1^∞ ... dr here,
// since sqrt(r^2-1) -> sinh t removes the square-root endpoint singularity.
double GProfile::density_cosh(double t) const {
    if (t == 0.0) return 0.0;
    const double ch = std::cosh(t);
    const double sh = std::sinh(t);
    return prefactor_ * sh * sh / (mu_ * mu_ + ch * ch) * std::exp(-exponent(ch) / pi);
}

double GProfile::value(double x) const {
    if (!(x > 0.0))
        throw std::domain_error("GProfile::value: requires x > 0");
    // e^{-x cosh t} is below e^{-50} e^{-x} past T; gamma only decays further.
    const double T = std::min(y_max_, std::acosh(1.0 + 50.0 / x));
    auto f = [this, x](double t) { return std::exp(-x * std::cosh(t)) * density_cosh(t); };
    Integral g = integrate(f, {0.0, std::min(1.0, 0.5 * T), T}, cfg_);
    if (!g.converged)
        throw ConvergenceError("G(x) quadrature did not converge");
    return g.value;
}

double GProfile::integral() const {
    // gamma(cosh t) sinh t / cosh t decays like e^{-3t/2}.
    const double T = 26.0;
    auto f = [this](double t) { return density_cosh(t) / std::cosh(t); };
    Integral g = integrate(f, {0.0, 1.0, 5.0, T}, cfg_);
    if (!g.converged)
        throw ConvergenceError("I_mu quadrature did not converge");
    return g.value;
}

double GProfile::integral_closed_form() const {
    const double e = std::sqrt(1.0 + mu_ * mu_);
    return (std::cos(theta_) - std::sqrt((1.0 + e) / (2.0 * e))) / mu_;
}

double GProfile::mass_quadrature() const {
    // gamma(cosh t) sinh t decays only like e^{-t/2}; the truncation at T
    // leaves under 3e-9 behind.
    const double T = 40.0;
    Integral g = integrate([this](double t) { return density_cosh(t); },
                           {0.0, 1.0, 5.0, 20.0, T}, cfg_);
    if (!g.converged)
        throw ConvergenceError("∫ gamma quadrature did not converge");
    return g.value;
}

std::shared_ptr<const GProfile> profile(double mu) {
    static std::mutex mtx;
    static std::map<double, std::shared_ptr<const GProfile>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<const GProfile>(mu);
    cache.emplace(mu, p);
    return p;
}

double gamma_mu(double mu, double r, const QuadratureConfig& cfg) {
    if (!(mu > 0.0))
        throw std::domain_error("gamma_mu: mu must be positive");
    if (!(r > 1.0))
        throw std::domain_error("gamma_mu: requires r > 1");
    const double pref = (std::sqrt(2.0) / (2.0 * pi)) * mu / std::sqrt(1.0 + mu * mu);
    const double s = std::sqrt((r - 1.0) * (r + 1.0));
    return pref * s / (mu * mu + r * r) * std::exp(-exponent_direct(mu, r, cfg) / pi);
}

double G(double mu, double x) { return profile(mu)->value(x); }

DualValue G_integral(double mu) {
    auto p = profile(mu);
    return {p->integral(), p->integral_closed_form()};
}

double F(double mu, double x) {
    if (x <= 0.0) return 0.0;
    auto p = profile(mu);
    return std::sin(mu * x + p->theta()) - p->value(x);
}

double laplace_F(double mu, double xi) {
    if (!(mu > 0.0))
        throw std::domain_error("laplace_F: mu must be positive");
    if (!(xi > 0.0))
        throw std::domain_error("laplace_F: real xi must be positive");
    const double J = exponent_direct(mu, xi, GProfile::profile_config());
    return (std::sqrt(2.0) / 2.0) * mu / (mu * mu + xi * xi) * std::exp(J / pi);
}

std::complex<double> laplace_F(double mu, std::complex<double> xi) {
    if (!(mu > 0.0))
        throw std::domain_error("laplace_F: mu must be positive");
    if (!(xi.real() > 0.0))
        throw std::domain_error("laplace_F: requires Re xi > 0");
    const std::complex<double> denom = mu * mu + xi * xi;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("laplace_F: xi too close to the poles at ±i mu");

    const double m2 = 1.0 + mu * mu;
    auto weight = [m2](double s) { return std::log1p(std::sqrt((1.0 + s * s) / m2)); };
    auto f = [&](double s) { return xi * weight(s) / (xi * xi + s * s); };

    const double R = std::abs(xi);
    const double S = 4.0 * (R + mu + 1.0);
    std::vector<double> breaks = {0.0, 0.5 * R, R, 2.0 * R, S};
    // A nearly imaginary xi makes the integrand sharply peaked near |Im xi|.
    const double peak = std::fabs(xi.imag());
    if (peak > 0.0 && peak < S) breaks.push_back(peak);
    std::sort(breaks.begin(), breaks.end());

    QuadratureConfig cfg = GProfile::profile_config();
    ComplexIntegral head = integrate_complex(f, breaks, cfg);
    // Tail via s -> 1/t; the transformed integrand has only a log endpoint.
    auto tail_f = [&](double t) {
        return xi * weight(1.0 / t) / (xi * xi * t * t + 1.0);
    };
    ComplexIntegral tail = integrate_complex(tail_f, {0.0, 1.0 / S}, cfg);
    if (!head.converged || !tail.converged)
        throw ConvergenceError("laplace_F exponent quadrature did not converge");

    const std::complex<double> E = (head.value + tail.value) / pi;
    return (std::sqrt(2.0) / 2.0) * mu / denom * std::exp(E);
}

double laplace_F_bound(double mu, std::complex<double> xi) {
    const double C = (xi.imag() == 0.0) ? std::sqrt(2.0) : 2.0;
    const double R2 = std::norm(xi);
    const double root = std::sqrt(1.0 + std::sqrt((1.0 + R2) / (1.0 + mu * mu)));
    return C * mu / std::abs(mu * mu + xi * xi) * root;
}

double bump_q(double x, double b) {
    if (!(b > 0.0))
        throw std::domain_error("bump_q: b must be positive");
    if (x <= -b) return 0.0;
    if (x >= b) return 1.0;
    if (x < 0.0) {
        const double t = (x + b) / b;
        return 0.5 * t * t;
    }
    const double t = (b - x) / b;
    return 1.0 - 0.5 * t * t;
}

double phi_tilde(double a_bar, int n, double x) {
    if (!(a_bar > 0.0))
        throw std::domain_error("phi_tilde: a_bar must be positive");
    if (n < 1)
        throw std::domain_error("phi_tilde: n must be >= 1");
    if (std::fabs(x) >= a_bar) return 0.0;
    const double mu = solve_mu_tilde(a_bar, n);
    auto p = profile(mu);
    const double b = a_bar / 3.0;
    auto half_line = [&](double y) {
        return y > 0.0 ? std::sin(mu * y + p->theta()) - p->value(y) : 0.0;
    };
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0; // (-1)^n
    return bump_q(-x, b) * half_line(a_bar + x) - sgn * bump_q(x, b) * half_line(a_bar - x);
}

double f_n(double a_bar, int n, double x) {
    if (!(a_bar > 0.0))
        throw std::domain_error("f_n: a_bar must be positive");
    if (n < 1)
        throw std::domain_error("f_n: n must be >= 1");
    if (std::fabs(x) >= a_bar) return 0.0;
    const double mu = solve_mu_tilde(a_bar, n);
    const double amp = 1.0 / std::sqrt(a_bar);
    return (n % 2 == 1) ? amp * std::cos(mu * x) : amp * std::sin(mu * x);
}

NormSquaredBounds phi_tilde_norm_sq_bounds(double a_bar, int n) {
    const double mu = solve_mu_tilde(a_bar, n);
    auto p = profile(mu);
    const double st = std::sin(p->theta());
    const double I = p->integral_closed_form();
    NormSquaredBounds b;
    b.lower = a_bar - st / mu - 4.0 * I;
    b.upper = a_bar + st / mu + 4.0 * I * (1.0 + st);
    return b;
}

double phi_tilde_norm(double a_bar, int n, const QuadratureConfig& cfg) {
    const double b = a_bar / 3.0;
    auto f = [&](double x) {
        const double v = phi_tilde(a_bar, n, x);
        return v * v;
    };
    Integral nrm = integrate(f, {-a_bar, -b, 0.0, b, a_bar}, cfg);
    if (!nrm.converged)
        throw ConvergenceError("phi_tilde norm quadrature did not converge");
    return std::sqrt(nrm.value);
}

WaveApprox wave_phi_tilde(double a_bar, int n) {
    WaveApprox w;
    w.kind = WaveApprox::Kind::phi_tilde;
    w.n = n;
    w.a_bar = a_bar;
    w.mu_tilde = solve_mu_tilde(a_bar, n);
    profile(w.mu_tilde); // warm the cache once, outside the lambda
    const double nrm = phi_tilde_norm(a_bar, n);
    w.eval = [a_bar, n, nrm](double x) { return phi_tilde(a_bar, n, x) / nrm; };
    return w;
}

WaveApprox wave_interior(double a_bar, int n) {
    WaveApprox w;
    w.kind = WaveApprox::Kind::interior;
    w.n = n;
    w.a_bar = a_bar;
    w.mu_tilde = solve_mu_tilde(a_bar, n);
    w.eval = [a_bar, n](double x) { return f_n(a_bar, n, x); };
    return w;
}

EigenfunctionErrorBounds eigenfunction_error_bounds(const PhysicalParams& p, int n) {
    if (n < 1)
        throw std::domain_error("eigenfunction_error_bounds: n must be >= 1");
    const double a_bar = to_natural(p).a_bar;
    EigenfunctionErrorBounds b;
    const double unit = std::sqrt(p.m * p.c / p.hbar); // L^2-normalization scale
    b.l2_bound = unit * std::min(10.0 / std::sqrt(double(n)),
                                 55.0 * std::sqrt(double(n)) / a_bar);
    b.sup_bound = 8.0 / std::sqrt(p.a);
    const double norm = phi_tilde_norm(a_bar, n);
    b.l2_refined = 1.455 * (1.0 + a_bar / 3.0) *
                   std::sqrt(4.0 * a_bar * a_bar + pi * pi) *
                   std::exp(-a_bar / 3.0) * std::sqrt(a_bar) / (n * norm);
    return b;
}

} // namespace qrwell
