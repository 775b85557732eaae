#include "qrwell/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "qrwell/phase_shift.hpp"
#include "qrwell/special.hpp"

namespace qrwell {

namespace {

void require_mode(int n) {
    if (n < 1) throw std::domain_error("mode index n must be >= 1");
}

void require_a_bar(double a_bar) {
    if (!(a_bar > 0.0)) throw std::domain_error("a_bar must be positive");
}

void require_physical(const PhysicalParams& p, bool need_mass) {
    if (!(p.hbar > 0.0 && p.c > 0.0 && p.a > 0.0))
        throw std::domain_error("hbar, c, a must be positive");
    if (p.m < 0.0 || (need_mass && !(p.m > 0.0)))
        throw std::domain_error("mass must be positive for massive estimates");
}

double rest_energy(const PhysicalParams& p) { return p.m * p.c * p.c; }

// Half-width of the wall bump used in the trial modes; fixed at a_bar/3,
// the choice under which all boundary-layer constants below were derived.
double bump_b(double a_bar) { return a_bar / 3.0; }

// sqrt(2.497 + 9.356/x + 10.314/x^2) with x = mu_tilde * a_bar
double residual_poly(double x) {
    return std::sqrt(2.497 + 9.356 / x + 10.314 / (x * x));
}

} // namespace

NaturalParams to_natural(const PhysicalParams& p) {
    require_physical(p, true);
    return {p.m * p.c * p.a / p.hbar};
}

double energy_to_physical(double e_natural, const PhysicalParams& p) {
    require_physical(p, true);
    return e_natural * rest_energy(p);
}

double w_dispersion(double xi) {
    if (xi < -1.0) throw std::domain_error("w_dispersion: xi must be >= -1");
    return xi / (1.0 + std::sqrt(1.0 + xi));
}

double solve_mu_tilde(double a_bar, int n) {
    require_a_bar(a_bar);
    require_mode(n);
    const double target = 0.5 * n * M_PI;
    auto f = [a_bar, target](double mu) {
        return a_bar * mu + theta_value(mu) - target;
    };

    double lo = (target - M_PI / 8.0) / a_bar;
    double hi = target / a_bar;
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw ConsistencyError("solve_mu_tilde: a-priori bracket does not straddle the root");

    // Bisection/secant hybrid: accept the secant step only if it lands
    // safely inside the current bracket, otherwise bisect.
    double mu = lo, fmu = flo;
    for (int it = 0; it < 200; ++it) {
        double cand = hi - fhi * (hi - lo) / (fhi - flo);
        const double width = hi - lo;
        if (!(cand > lo + 0.01 * width && cand < hi - 0.01 * width))
            cand = 0.5 * (lo + hi);
        mu = cand;
        fmu = f(mu);
        if (std::fabs(fmu) < 1e-12 || width < 8.0 * std::numeric_limits<double>::epsilon() * mu)
            return mu;
        if (fmu < 0.0) {
            lo = mu;
            flo = fmu;
        } else {
            hi = mu;
            fhi = fmu;
        }
    }
    if (std::fabs(fmu) < 1e-9) return mu;  // stagnated at quadrature noise
    throw ConvergenceError("solve_mu_tilde: residual did not reach tolerance");
}

MuTildeBounds mu_tilde_refined_bounds(double a_bar, int n) {
    require_a_bar(a_bar);
    require_mode(n);
    const double mu_up = n * M_PI / (2.0 * a_bar);
    const double lower = (0.5 * n * M_PI - theta_value(mu_up)) / a_bar;
    const double nm = n - 0.25;
    const double upper = lower + std::min(8.0 * n / (M_PI * a_bar), 1.0) /
                                     (4.0 * a_bar * a_bar + M_PI * M_PI * nm * nm);
    return {lower, upper};
}

ModeEstimate mode_estimate(double a_bar, int n) {
    require_a_bar(a_bar);
    require_mode(n);
    ModeEstimate me;
    me.n = n;
    me.mu_tilde = solve_mu_tilde(a_bar, n);
    const double mu2 = me.mu_tilde * me.mu_tilde;
    me.E_tilde = std::sqrt(mu2 + 1.0);
    me.lambda_tilde = w_dispersion(mu2);
    const double ub = u(bump_b(a_bar));  // (1 + a_bar/3) e^{-a_bar/3}
    me.err_simple = (8.0 / n) * (3.0 + 1.0 / a_bar) * std::exp(-a_bar / 3.0);
    const double x = me.mu_tilde * a_bar;
    me.residual_norm_bound = ub / (me.mu_tilde * std::pow(a_bar, 1.5)) * residual_poly(x);
    if (x > 1.251) {
        me.err_refined = ub / (me.mu_tilde * a_bar * a_bar) * residual_poly(x) /
                         std::sqrt(1.0 - 1.251 / x);
    }
    const double om_lo = (n - 1) * M_PI / (2.0 * a_bar);
    const double om_hi = n * M_PI / (2.0 * a_bar);
    me.cs2_lower = std::sqrt(om_lo * om_lo + 1.0);
    me.cs2_upper = std::sqrt(om_hi * om_hi + 1.0);
    const double om_w = (0.5 * n * M_PI - M_PI / 8.0) / a_bar;
    me.weyl2 = std::sqrt(om_w * om_w + 1.0);
    me.parity = (n % 2 == 1) ? Parity::even : Parity::odd;
    return me;
}

EnergyBounds cs1_bounds(double a_bar, int n) {
    require_a_bar(a_bar);
    require_mode(n);
    const double om = n * M_PI / (2.0 * a_bar);
    const double upper = std::sqrt(om * om + 1.0);
    return {0.5 * (upper + 1.0), upper};
}

ExplicitEstimate explicit_estimate(const PhysicalParams& p, int n) {
    require_physical(p, true);
    require_mode(n);
    const double a_bar = to_natural(p).a_bar;
    const double mu_star = n * M_PI / (2.0 * a_bar);
    const double k = (0.5 * n * M_PI - theta_value(mu_star)) / a_bar;
    ExplicitEstimate est;
    est.value = rest_energy(p) * std::sqrt(k * k + 1.0);
    est.bound = 12.0 * p.hbar * p.c / (n * p.a);
    return est;
}

ExplicitEstimate explicit_estimate_refined(const PhysicalParams& p, int n) {
    require_physical(p, true);
    require_mode(n);
    const double a_bar = to_natural(p).a_bar;
    const double mu_star = n * M_PI / (2.0 * a_bar);
    const double k = (0.5 * n * M_PI - theta_value(mu_star)) / a_bar;
    ExplicitEstimate est;
    est.value = rest_energy(p) * w_dispersion(k * k);
    const double na = n + a_bar;
    est.bound = rest_energy(p) / (n * a_bar) *
                (7.309 * (1.0 + a_bar / 3.0) * std::exp(-a_bar / 3.0) +
                 4.443 * std::pow(n, 3) * a_bar / (na * na * na * na));
    return est;
}

double nonrelativistic_limit(const PhysicalParams& p, int n) {
    require_physical(p, true);
    require_mode(n);
    const double k = n * M_PI * p.hbar / (2.0 * p.a);
    return rest_energy(p) + k * k / (2.0 * p.m);
}

ExplicitEstimate massless_limit(const PhysicalParams& p, int n) {
    require_physical(p, false);
    require_mode(n);
    ExplicitEstimate est;
    est.value = (0.5 * n * M_PI - M_PI / 8.0) * p.hbar * p.c / p.a;
    est.bound = 8.0 * p.hbar * p.c / (p.a * n);
    return est;
}

SpectralIntervalReport spectral_intervals(double a_bar, int n_max) {
    require_a_bar(a_bar);
    if (n_max < 3)
        throw std::domain_error("spectral_intervals: n_max must be >= 3");
    SpectralIntervalReport rep;
    for (int n = 3; n <= n_max; ++n) {
        ModeEstimate me = mode_estimate(a_bar, n);
        if (!me.err_refined)
            throw ConsistencyError("spectral_intervals: refinement guard failed for n >= 3");
        rep.intervals.push_back({n, me.lambda_tilde, *me.err_refined});
    }
    rep.pairwise_disjoint = true;
    for (std::size_t i = 0; i + 1 < rep.intervals.size(); ++i) {
        const auto& a = rep.intervals[i];
        const auto& b = rep.intervals[i + 1];
        if (a.center + a.half_width >= b.center - b.half_width)
            rep.pairwise_disjoint = false;
    }
    rep.lambda2_upper = w_dispersion(M_PI * M_PI / (a_bar * a_bar));
    const auto& first = rep.intervals.front();
    rep.separated_from_below = first.center - first.half_width > rep.lambda2_upper;
    return rep;
}

double heat_trace_upper(double a_bar, double t, const QuadratureConfig& cfg) {
    require_a_bar(a_bar);
    if (!(t > 0.0)) throw std::domain_error("heat_trace_upper: t must be positive");
    auto f = [t](double s) { return std::exp(-t * w_dispersion(s * s)); };
    // w(s^2) >= s - 1, so the integrand tail beyond S is below e^{-t(s-1)}.
    const double S = 1.0 + 46.0 / t;
    QuadratureConfig c = cfg;
    c.fixed_cutoff = S;
    Integral r = integrate_to_inf(f, 0.0, c);
    const double tail = std::exp(-t * (S - 1.0)) / t;
    return (2.0 * a_bar / M_PI) * (r.value + tail);
}

double heat_trace_estimate(double a_bar, double t) {
    require_a_bar(a_bar);
    if (!(t > 0.0)) throw std::domain_error("heat_trace_estimate: t must be positive");
    double sum = 0.0, term = 1.0;
    for (int n = 1; n <= 100000; ++n) {
        ModeEstimate m = mode_estimate(a_bar, n);
        const double err = m.err_refined ? *m.err_refined : m.err_simple;
        term = std::exp(-t * std::max(0.0, m.lambda_tilde - err));
        sum += term;
        if (term < 1e-13) break;
    }
    const double r = std::exp(-t * M_PI / (2.0 * a_bar)); // level spacing floor
    return sum + term * r / (1.0 - r);
}

double parity_kinetic_upper(Parity sector, int n, double a_bar) {
    require_a_bar(a_bar);
    require_mode(n);
    const double k = (sector == Parity::even) ? (n * M_PI - M_PI / 2.0) / a_bar
                                              : n * M_PI / a_bar;
    return w_dispersion(k * k);
}

} // namespace qrwell
