#include "qrwell/phase_shift.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qrwell {

namespace {

void require_positive_mu(double mu) {
    if (!(mu > 0.0))
        throw std::domain_error("theta: mu must be positive");
}

// Integrand of the regularized (0,1) form, written cancellation-free.
// With A = sqrt((1+mu^2/s^2)/(1+mu^2)), B = sqrt((1+mu^2 s^2)/(1+mu^2)):
//   log((1+A)/(1+B)) = log1p((1-s^2) T),
//   T = mu^2 (1+s^2) / (s^2 (1+mu^2)(A+B)(1+B)),
// so the integrand log((1+A)/(1+B))/(1-s^2) extends continuously through
// s = 1 with value T(1) = mu^2 / (2(1+mu^2)).
double reg_integrand(double mu, double s) {
    const double mu2 = mu * mu;
    const double s2 = s * s;
    const double one_mu2 = 1.0 + mu2;
    const double A = std::sqrt((1.0 + mu2 / s2) / one_mu2);
    const double B = std::sqrt((1.0 + mu2 * s2) / one_mu2);
    const double T = mu2 * (1.0 + s2) / (s2 * one_mu2 * (A + B) * (1.0 + B));
    const double w = 1.0 - s2;
    const double wT = w * T;
    if (std::fabs(wT) < 1e-8)
        return T * (1.0 - 0.5 * wT + wT * wT / 3.0);
    return std::log1p(wT) / w;
}

double theta_uncached(double mu, const QuadratureConfig& cfg) {
    std::vector<double> breaks{0.0, 1.0};
    if (mu > 2.0)
        breaks = {0.0, std::min(1.0 / mu, 0.5), 1.0};
    auto f = [mu](double s) { return reg_integrand(mu, s); };
    Integral r = integrate(f, breaks, cfg);
    if (!r.converged)
        throw ConvergenceError("theta: quadrature did not converge");
    const double value = r.value / M_PI;

    const ThetaBounds tb = theta_bounds(mu);
    const double slack = std::max(1e-13, 4.0 * r.error / M_PI);
    if (value < tb.lower - slack || value > tb.upper + slack)
        throw ConsistencyError("theta: value escaped its rigorous enclosure");
    return value;
}

std::mutex theta_cache_mutex;
std::map<std::pair<double, double>, double>& theta_cache() {
    static std::map<std::pair<double, double>, double> cache;
    return cache;
}

} // namespace

QuadratureConfig theta_default_config() {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-12;
    cfg.max_subdivisions = 4000;
    return cfg;
}

PhaseShiftEval theta(double mu, const QuadratureConfig& cfg) {
    require_positive_mu(mu);
    const std::pair<double, double> key{mu, cfg.abs_tol};
    {
        std::lock_guard<std::mutex> lock(theta_cache_mutex);
        auto it = theta_cache().find(key);
        if (it != theta_cache().end())
            return {mu, it->second, theta_derivative(mu)};
    }
    const double value = theta_uncached(mu, cfg);
    {
        std::lock_guard<std::mutex> lock(theta_cache_mutex);
        theta_cache().emplace(key, value);
    }
    return {mu, value, theta_derivative(mu)};
}

PhaseShiftEval theta(double mu) { return theta(mu, theta_default_config()); }

double theta_value(double mu) { return theta(mu).theta; }

double theta_pv(double mu, const QuadratureConfig& cfg) {
    require_positive_mu(mu);
    const double mu2 = mu * mu;
    auto f = [mu, mu2](double s) {
        return mu / (s * s - mu2) *
               std::log(0.5 + 0.5 * std::sqrt((1.0 + s * s) / (1.0 + mu2)));
    };
    // Pole excised symmetrically over (0, H); the slowly decaying tail
    // (~ log s / s^2) is folded to (0, 1/H) via s = 1/t, which turns it into
    // an integrable log singularity at t = 0.
    const double H = 2.0 * mu + 10.0;
    Integral head = integrate_pv(f, mu, 0.0, H, cfg);
    auto tail = [mu, mu2](double t) {
        const double inv_t2 = 1.0 / (t * t);
        return mu / (1.0 - mu2 * t * t) *
               std::log(0.5 + 0.5 * std::sqrt((1.0 + inv_t2) / (1.0 + mu2)));
    };
    Integral rest = integrate(tail, 0.0, 1.0 / H, cfg);
    if (!head.converged || !rest.converged)
        throw ConvergenceError("theta_pv: quadrature did not converge");
    return (head.value + rest.value) / M_PI;
}

double theta_derivative(double mu) {
    require_positive_mu(mu);
    const double s = std::sqrt(1.0 + mu * mu);
    // log((1+mu+s)/(1-mu+s)) = log1p(2mu/(1-mu+s)), stable for small mu
    const double ratio = std::log1p(2.0 * mu / (1.0 - mu + s));
    return ratio / (M_PI * mu * (1.0 + mu * mu));
}

double theta_from_derivative(double mu, const QuadratureConfig& cfg) {
    require_positive_mu(mu);
    const double mu0 = std::min(1e-3, 0.5 * mu);
    auto f = [](double m) { return theta_derivative(m); };
    Integral r = integrate(f, mu0, mu, cfg);
    if (!r.converged)
        throw ConvergenceError("theta_from_derivative: quadrature did not converge");
    return theta_asymptotic_small(mu0) + r.value;
}

double theta_asymptotic_small(double mu) {
    return mu / M_PI - 7.0 * mu * mu * mu / (18.0 * M_PI);
}

double theta_asymptotic_large(double mu) {
    return M_PI / 8.0 - (1.0 + 2.0 * std::log(2.0 * mu)) / (4.0 * M_PI * mu * mu);
}

ThetaBounds theta_bounds(double mu) {
    require_positive_mu(mu);
    ThetaBounds tb;
    tb.lower = std::max(0.0, M_PI / 8.0 - 2.0 / (M_PI * mu));
    tb.upper = std::min(2.0 * mu / M_PI, M_PI / 8.0);
    return tb;
}

} // namespace qrwell
