#include "qrwell/cli_report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "qrwell/eigenfunctions.hpp"
#include "qrwell/errors.hpp"
#include "qrwell/oracle.hpp"
#include "qrwell/phase_shift.hpp"
#include "qrwell/quadrature.hpp"
#include "qrwell/special.hpp"

namespace qrwell {

namespace {

using nlohmann::json;

constexpr double pi = 3.14159265358979323846;

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::theta: return "theta";
        case Subcommand::modes: return "modes";
        case Subcommand::bounds: return "bounds";
        case Subcommand::intervals: return "intervals";
        case Subcommand::trace: return "trace";
        case Subcommand::eigfun: return "eigfun";
        case Subcommand::oracle: return "oracle";
        case Subcommand::validate: return "validate";
        case Subcommand::figures: return "figures";
    }
    return "?";
}

struct Dataset {
    std::vector<std::string> columns;
    json rows = json::array();
    json meta = json::object();
};

std::string cell_text(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump(); // shortest round-trip form for numbers
}

void render(const Dataset& d, const RunSpec& spec, std::ostream& os) {
    const OutputFormat fmt =
        (spec.subcommand == Subcommand::figures) ? OutputFormat::csv : spec.output;
    if (fmt == OutputFormat::json) {
        json out;
        out["schema"] = 1;
        out["subcommand"] = subcommand_name(spec.subcommand);
        out["meta"] = d.meta;
        out["columns"] = d.columns;
        out["rows"] = d.rows;
        os << out.dump(2) << "\n";
        return;
    }
    if (fmt == OutputFormat::csv) {
        for (std::size_t i = 0; i < d.columns.size(); ++i)
            os << (i ? "," : "") << d.columns[i];
        os << "\n";
        for (const auto& row : d.rows) {
            for (std::size_t i = 0; i < d.columns.size(); ++i)
                os << (i ? "," : "") << cell_text(row.value(d.columns[i], json()));
            os << "\n";
        }
        return;
    }
    // aligned table
    std::vector<std::size_t> width(d.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < d.columns.size(); ++i)
        width[i] = d.columns[i].size();
    for (const auto& row : d.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < d.columns.size(); ++i) {
            json v = row.value(d.columns[i], json());
            std::string s;
            if (v.is_number_float()) {
                std::ostringstream tmp;
                tmp << std::setprecision(10) << v.get<double>();
                s = tmp.str();
            } else {
                s = cell_text(v);
            }
            width[i] = std::max(width[i], s.size());
            line.push_back(std::move(s));
        }
        cells.push_back(std::move(line));
    }
    for (std::size_t i = 0; i < d.columns.size(); ++i)
        os << std::setw(static_cast<int>(width[i]) + 2) << d.columns[i];
    os << "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
            os << std::setw(static_cast<int>(width[i]) + 2) << line[i];
        os << "\n";
    }
    if (!d.meta.empty()) os << "# meta " << d.meta.dump() << "\n";
}

PhysicalParams effective_physical(const RunSpec& spec) {
    if (!spec.natural) return spec.phys;
    PhysicalParams p;
    p.hbar = p.c = p.m = 1.0;
    p.a = spec.nat.a_bar;
    return p;
}

std::vector<double> default_mu_grid() {
    std::vector<double> g;
    for (int k = 0; k <= 60; ++k) g.push_back(std::pow(10.0, -3.0 + 6.0 * k / 60.0));
    return g;
}

Dataset do_theta(const RunSpec& spec) {
    Dataset d;
    d.columns = {"mu", "theta", "dtheta_dmu", "lower", "upper"};
    std::vector<double> mus = spec.mu_values.empty() ? default_mu_grid() : spec.mu_values;
    for (double mu : mus) {
        PhaseShiftEval e = theta(mu);
        ThetaBounds b = theta_bounds(mu);
        d.rows.push_back({{"mu", mu},
                          {"theta", e.theta},
                          {"dtheta_dmu", e.dtheta_dmu},
                          {"lower", b.lower},
                          {"upper", b.upper}});
    }
    return d;
}

Dataset do_modes(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    const PhysicalParams p = effective_physical(spec);
    d.meta["a_bar"] = a_bar;
    d.columns = {"n",          "mu_tilde",   "E_tilde",    "E_physical",
                 "lambda_tilde", "err_simple", "err_refined", "parity"};
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        ModeEstimate m = mode_estimate(a_bar, n);
        json row = {{"n", n},
                    {"mu_tilde", m.mu_tilde},
                    {"E_tilde", m.E_tilde},
                    {"E_physical", energy_to_physical(m.E_tilde, p)},
                    {"lambda_tilde", m.lambda_tilde},
                    {"err_simple", m.err_simple},
                    {"parity", m.parity == Parity::even ? "even" : "odd"}};
        row["err_refined"] = m.err_refined ? json(*m.err_refined) : json();
        d.rows.push_back(row);
    }
    return d;
}

Dataset do_bounds(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    const PhysicalParams p = effective_physical(spec);
    d.meta["a_bar"] = a_bar;
    d.columns = {"n",           "E_tilde",     "cs1_lower",     "cs1_upper",
                 "cs2_lower",   "cs2_upper",   "weyl2",         "explicit_value",
                 "explicit_bound", "kinetic_value", "kinetic_bound", "nonrelativistic"};
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        ModeEstimate m = mode_estimate(a_bar, n);
        EnergyBounds c1 = cs1_bounds(a_bar, n);
        ExplicitEstimate ex = explicit_estimate(p, n);
        ExplicitEstimate rf = explicit_estimate_refined(p, n);
        d.rows.push_back({{"n", n},
                          {"E_tilde", m.E_tilde},
                          {"cs1_lower", c1.lower},
                          {"cs1_upper", c1.upper},
                          {"cs2_lower", m.cs2_lower},
                          {"cs2_upper", m.cs2_upper},
                          {"weyl2", m.weyl2},
                          {"explicit_value", ex.value},
                          {"explicit_bound", ex.bound},
                          {"kinetic_value", rf.value},
                          {"kinetic_bound", rf.bound},
                          {"nonrelativistic", nonrelativistic_limit(p, n)}});
    }
    return d;
}

Dataset do_intervals(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    SpectralIntervalReport r = spectral_intervals(a_bar, std::max(spec.n_hi, 3));
    d.meta["a_bar"] = a_bar;
    d.meta["pairwise_disjoint"] = r.pairwise_disjoint;
    d.meta["lambda2_upper"] = r.lambda2_upper;
    d.meta["separated_from_below"] = r.separated_from_below;
    d.columns = {"n", "center", "half_width", "lower", "upper"};
    for (const SpectralInterval& iv : r.intervals)
        d.rows.push_back({{"n", iv.n},
                          {"center", iv.center},
                          {"half_width", iv.half_width},
                          {"lower", iv.center - iv.half_width},
                          {"upper", iv.center + iv.half_width}});
    return d;
}

Dataset do_trace(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    d.meta["a_bar"] = a_bar;
    d.columns = {"t", "trace_upper_bound", "trace_estimate", "dominates"};
    std::vector<double> ts = spec.t_values.empty() ? std::vector<double>{0.5, 1.0, 2.0}
                                                   : spec.t_values;
    for (double t : ts) {
        if (!(t > 0.0)) throw std::domain_error("trace: t must be positive");
        const double bound = heat_trace_upper(a_bar, t);
        const double est = heat_trace_estimate(a_bar, t);
        d.rows.push_back({{"t", t},
                          {"trace_upper_bound", bound},
                          {"trace_estimate", est},
                          {"dominates", bound >= est}});
    }
    return d;
}

Dataset do_eigfun(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    d.meta["a_bar"] = a_bar;
    d.columns = {"n",      "mu_tilde",     "theta",         "boundary_G0",
                 "i_mu",   "norm_sq_lower", "norm_sq_upper", "norm_sq_numeric"};
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        const double mu = solve_mu_tilde(a_bar, n);
        auto p = profile(mu);
        NormSquaredBounds nb = phi_tilde_norm_sq_bounds(a_bar, n);
        const double nrm = phi_tilde_norm(a_bar, n);
        d.rows.push_back({{"n", n},
                          {"mu_tilde", mu},
                          {"theta", p->theta()},
                          {"boundary_G0", p->boundary_value()},
                          {"i_mu", p->integral_closed_form()},
                          {"norm_sq_lower", nb.lower},
                          {"norm_sq_upper", nb.upper},
                          {"norm_sq_numeric", nrm * nrm}});
    }
    return d;
}

Dataset do_oracle(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    RRConfig cfg;
    cfg.n_basis = spec.n_basis;
    if (spec.tolerance > 0.0) cfg.entry_tol = spec.tolerance;
    RROracle o = rr_solve(a_bar, cfg);
    d.meta["a_bar"] = a_bar;
    d.meta["n_basis"] = cfg.n_basis;
    d.meta["entry_error_frobenius_even"] = o.even_block.entry_error_frobenius;
    d.meta["entry_error_frobenius_odd"] = o.odd_block.entry_error_frobenius;
    const int n_max = static_cast<int>(o.energies.size());
    if (n_max >= 20) {
        WeylFit fit = rr_weyl_fit(o, 10, 20);
        d.meta["weyl_phase"] = fit.phase;
        d.meta["weyl_slope"] = fit.slope;
    }
    d.columns = {"n",       "E_rr",   "parity",     "E_tilde",
                 "E_rr_minus_E_tilde", "err_bound", "eig_perturbation"};
    for (int n = spec.n_lo; n <= std::min(spec.n_hi, n_max); ++n) {
        ModeEstimate m = mode_estimate(a_bar, n);
        const double e = o.energies[static_cast<std::size_t>(n) - 1];
        d.rows.push_back(
            {{"n", n},
             {"E_rr", e},
             {"parity",
              o.parities[static_cast<std::size_t>(n) - 1] == Parity::even ? "even" : "odd"},
             {"E_tilde", m.E_tilde},
             {"E_rr_minus_E_tilde", e - m.E_tilde},
             {"err_bound", m.err_refined ? *m.err_refined : m.err_simple},
             {"eig_perturbation", o.eigenvalue_error[static_cast<std::size_t>(n) - 1]}});
    }
    return d;
}

Dataset do_validate(const RunSpec& spec, bool& all_pass) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    d.meta["a_bar"] = a_bar;
    d.columns = {"check", "pass", "detail"};
    all_pass = true;
    for (const CheckResult& c : run_validation(a_bar)) {
        all_pass = all_pass && c.pass;
        d.rows.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return d;
}

Dataset do_figures(const RunSpec& spec) {
    Dataset d;
    const double a_bar = spec_a_bar(spec);
    if (spec.which == "theta") {
        d.columns = {"mu", "theta"};
        for (int k = 0; k <= 180; ++k) {
            const double mu = std::pow(10.0, -3.0 + 6.0 * k / 180.0);
            d.rows.push_back({{"mu", mu}, {"theta", theta_value(mu)}});
        }
    } else if (spec.which == "phase-lines") {
        // phase shift against the straight lines n pi/2 - a mu whose
        // crossings define the mode wavenumbers
        d.columns = {"mu", "theta", "line_n1", "line_n2", "line_n3"};
        for (int k = 1; k <= 200; ++k) {
            const double mu = 5.0 * k / 200.0;
            d.rows.push_back({{"mu", mu},
                              {"theta", theta_value(mu)},
                              {"line_n1", 1.0 * pi / 2.0 - a_bar * mu},
                              {"line_n2", 2.0 * pi / 2.0 - a_bar * mu},
                              {"line_n3", 3.0 * pi / 2.0 - a_bar * mu}});
        }
    } else if (spec.which == "profiles") {
        const std::vector<double> mus = {0.05, 0.5, 1.0, 10.0};
        d.columns = {"x"};
        for (double mu : mus) {
            std::ostringstream fa, ga;
            fa << "F_mu" << mu;
            ga << "G_mu" << mu;
            d.columns.push_back(fa.str());
            d.columns.push_back(ga.str());
        }
        for (int k = 1; k <= 400; ++k) {
            const double x = 8.0 * k / 400.0;
            json row = {{"x", x}};
            for (std::size_t i = 0; i < mus.size(); ++i) {
                row[d.columns[1 + 2 * i]] = F(mus[i], x);
                row[d.columns[2 + 2 * i]] = G(mus[i], x);
            }
            d.rows.push_back(row);
        }
    } else if (spec.which == "phitilde") {
        d.columns = {"x", "n1", "n2", "n3", "n4"};
        for (int k = 0; k <= 400; ++k) {
            const double x = -a_bar + 2.0 * a_bar * k / 400.0;
            d.rows.push_back({{"x", x},
                              {"n1", phi_tilde(a_bar, 1, x)},
                              {"n2", phi_tilde(a_bar, 2, x)},
                              {"n3", phi_tilde(a_bar, 3, x)},
                              {"n4", phi_tilde(a_bar, 4, x)}});
        }
    } else if (spec.which == "intervals") {
        RunSpec s = spec;
        s.n_hi = std::max(spec.n_hi, 10);
        return do_intervals(s);
    } else {
        throw std::invalid_argument("figures: unknown dataset '" + spec.which + "'");
    }
    return d;
}

} // namespace

double spec_a_bar(const RunSpec& spec) {
    return spec.natural ? spec.nat.a_bar : to_natural(spec.phys).a_bar;
}

int run(const RunSpec& spec, std::ostream& os, std::ostream& err) {
    try {
        if (spec.n_lo < 1 || spec.n_hi < spec.n_lo)
            throw std::invalid_argument("mode range must satisfy 1 <= n_lo <= n_hi");
        const double a_bar = spec_a_bar(spec);
        if (!(a_bar > 0.0) || !std::isfinite(a_bar))
            throw std::invalid_argument("half-width must be positive");

        Dataset d;
        bool all_pass = true;
        switch (spec.subcommand) {
            case Subcommand::theta: d = do_theta(spec); break;
            case Subcommand::modes: d = do_modes(spec); break;
            case Subcommand::bounds: d = do_bounds(spec); break;
            case Subcommand::intervals: d = do_intervals(spec); break;
            case Subcommand::trace: d = do_trace(spec); break;
            case Subcommand::eigfun: d = do_eigfun(spec); break;
            case Subcommand::oracle: d = do_oracle(spec); break;
            case Subcommand::validate: d = do_validate(spec, all_pass); break;
            case Subcommand::figures: d = do_figures(spec); break;
        }
        render(d, spec, os);
        if (!all_pass) {
            err << "validate: at least one check failed\n";
            return 1;
        }
        return 0;
    } catch (const ConvergenceError& e) {
        err << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    }
}

namespace {

std::string num(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

CheckResult check(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult c;
    c.name = name;
    c.pass = true;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

void expect(CheckResult& c, bool ok, const std::string& msg) {
    if (!ok) {
        c.pass = false;
        if (!c.detail.empty()) c.detail += "; ";
        c.detail += msg;
    }
}

} // namespace

std::vector<CheckResult> run_validation(double a_bar) {
    std::vector<CheckResult> out;

    out.push_back(check("theta-bounds-monotone", [](CheckResult& c) {
        double prev = -1.0;
        for (double mu : {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0}) {
            const double t = theta_value(mu);
            ThetaBounds b = theta_bounds(mu);
            expect(c, b.lower - 1e-12 <= t && t <= b.upper + 1e-12,
                   "bounds violated at mu=" + num(mu));
            expect(c, t > prev, "not increasing at mu=" + num(mu));
            prev = t;
        }
    }));

    out.push_back(check("theta-three-routes", [](CheckResult& c) {
        for (double mu : {0.5, 2.0}) {
            const double reg = theta_value(mu);
            const double pv = theta_pv(mu);
            const double ode = theta_from_derivative(mu);
            expect(c, std::fabs(reg - pv) < 1e-7, "pv route off at mu=" + num(mu));
            expect(c, std::fabs(reg - ode) < 1e-7, "ode route off at mu=" + num(mu));
        }
    }));

    out.push_back(check("theta-asymptotics", [](CheckResult& c) {
        const double small = theta_value(1e-3) / 1e-3;
        expect(c, std::fabs(small - 1.0 / pi) < 1e-3,
               "small-mu slope " + num(small));
        const double large = theta_value(1e3);
        const double ref = pi / 8.0 - (1.0 + 2.0 * std::log(2000.0)) / (4.0 * pi * 1e6);
        expect(c, std::fabs(large - ref) < 1e-8, "large-mu tail " + num(large - ref));
    }));

    out.push_back(check("mode-roots", [](CheckResult& c) {
        for (double a : {1.0, 10.0}) {
            for (int n = 1; n <= 6; ++n) {
                const double mu = solve_mu_tilde(a, n);
                const double res = a * mu + theta_value(mu) - n * pi / 2.0;
                expect(c, std::fabs(res) < 1e-9,
                       "residual " + num(res) + " at a=" + num(a) + " n=" + num(n));
                MuTildeBounds b = mu_tilde_refined_bounds(a, n);
                expect(c, b.lower <= mu && mu <= b.upper,
                       "refined bracket misses root at a=" + num(a) + " n=" + num(n));
            }
        }
    }));

    out.push_back(check("energy-sandwich", [](CheckResult& c) {
        for (double a : {1.0, 10.0}) {
            for (int n = 1; n <= 8; ++n) {
                ModeEstimate m = mode_estimate(a, n);
                EnergyBounds c1 = cs1_bounds(a, n);
                expect(c, m.cs2_lower < m.E_tilde && m.E_tilde <= m.cs2_upper,
                       "two-sided bound fails at a=" + num(a) + " n=" + num(n));
                expect(c, c1.lower <= m.E_tilde && m.E_tilde <= c1.upper,
                       "crude bound fails at a=" + num(a) + " n=" + num(n));
            }
        }
    }));

    out.push_back(check("spectral-intervals", [](CheckResult& c) {
        for (double a : {3.0, 10.0}) {
            SpectralIntervalReport r = spectral_intervals(a, 10);
            expect(c, r.pairwise_disjoint, "overlap at a=" + num(a));
            expect(c, r.separated_from_below, "n=3 not separated at a=" + num(a));
        }
    }));

    out.push_back(check("kernel-k1", [](CheckResult& c) {
        const struct {
            double x, ref;
        } refs[] = {{0.1, 9.8538447808706061348},
                    {1.0, 0.60190723019723457474},
                    {5.0, 0.0040446134454521642084}};
        for (const auto& r : refs)
            expect(c, std::fabs(bessel_k1(r.x) / r.ref - 1.0) < 1e-13,
                   "K1 off at x=" + num(r.x));
        // independent integral representation K1(x) = ∫ e^{-x cosh t} cosh t dt
        const double x = 1.5;
        Integral rep = integrate_to_inf(
            [x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(t); }, 0.0);
        expect(c, std::fabs(rep.value - bessel_k1(x)) < 1e-9, "integral rep off");
    }));

    out.push_back(check("multiplier-identity", [](CheckResult& c) {
        // 2 ∫_0^∞ (1 - cos(xi z)) nu(z) dz must equal w(xi^2)
        for (double xi : {1.0, 3.0}) {
            auto f = [xi](double z) { return (1.0 - std::cos(xi * z)) * nu(z); };
            QuadratureConfig cfg;
            cfg.abs_tol = cfg.rel_tol = 1e-11;
            Integral head = integrate(f, {1e-12, 1.0 / xi, 1.0, 5.0}, cfg);
            Integral tail = integrate_to_inf(f, 5.0, cfg);
            const double lhs = 2.0 * (head.value + tail.value);
            expect(c, std::fabs(lhs - w_dispersion(xi * xi)) < 1e-7,
                   "symbol mismatch at xi=" + num(xi));
        }
    }));

    out.push_back(check("wall-boundary-value", [](CheckResult& c) {
        for (double mu : {0.5, 2.0}) {
            auto p = profile(mu);
            expect(c, std::fabs(p->mass_quadrature() - p->boundary_value()) < 1e-8,
                   "G(0+) != sin(theta) at mu=" + num(mu));
        }
    }));

    out.push_back(check("i-mu-dual-route", [](CheckResult& c) {
        for (double mu : {0.2, 1.0, 5.0}) {
            DualValue v = G_integral(mu);
            expect(c, std::fabs(v.quadrature - v.closed_form) < 1e-7,
                   "routes differ at mu=" + num(mu));
            const double cap = std::min(mu / 8.0, 0.217 / mu);
            expect(c, v.closed_form >= 0.0 && v.closed_form <= cap,
                   "I_mu outside (0, min(mu/8, 0.217/mu)) at mu=" + num(mu));
        }
    }));

    out.push_back(check("laplace-dual-route", [](CheckResult& c) {
        for (auto [mu, xi] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
            const double closed = laplace_F(mu, xi);
            auto f = [mu, xi](double x) { return std::exp(-xi * x) * F(mu, x); };
            QuadratureConfig cfg;
            cfg.abs_tol = cfg.rel_tol = 1e-9;
            Integral direct = integrate_to_inf(f, 0.0, cfg);
            expect(c, std::fabs(direct.value - closed) < 1e-6,
                   "transform mismatch at mu=" + num(mu) + " xi=" + num(xi));
            expect(c, closed <= laplace_F_bound(mu, xi) * (1.0 + 1e-9),
                   "modulus bound violated");
        }
    }));

    out.push_back(check("complete-monotonicity", [](CheckResult& c) {
        // forward differences of G alternate in sign (h = 0.25 on [0.5, 4])
        auto p = profile(1.0);
        std::vector<double> g;
        for (int i = 0; i < 15; ++i) g.push_back(p->value(0.5 + 0.25 * i));
        for (int order = 0; order < 4; ++order) {
            for (std::size_t i = 0; i + 1 < g.size(); ++i) g[i] = g[i + 1] - g[i];
            g.pop_back();
            const double sign = (order % 2 == 0) ? -1.0 : 1.0;
            for (double v : g)
                expect(c, sign * v >= -1e-12,
                       "difference of order " + num(order + 1) + " changes sign");
        }
    }));

    out.push_back(check("wall-continuity", [&a_bar](CheckResult& c) {
        const double a = a_bar;
        // the trial mode has a sqrt boundary layer, |phi(a - eps)| = O(sqrt(eps))
        const double eps = 1e-7;
        const double cap = 5.0 * std::sqrt(eps);
        for (int n : {1, 2}) {
            expect(c, std::fabs(phi_tilde(a, n, a - eps)) < cap,
                   "trial mode does not vanish at +a");
            expect(c, std::fabs(phi_tilde(a, n, -a + eps)) < cap,
                   "trial mode does not vanish at -a");
            NormSquaredBounds b = phi_tilde_norm_sq_bounds(a, n);
            const double nrm = phi_tilde_norm(a, n);
            expect(c, b.lower - 1e-9 <= nrm * nrm && nrm * nrm <= b.upper + 1e-9,
                   "norm sandwich fails at n=" + num(n));
        }
    }));

    out.push_back(check("oracle-consistency", [](CheckResult& c) {
        RRConfig cfg;
        cfg.n_basis = 16;
        RROracle o = rr_solve(1.0, cfg);
        for (int i = 0; i < 6; ++i) {
            expect(c, o.energies[static_cast<std::size_t>(i)] > 1.0, "Ritz value <= 1");
            const Parity expected = (i % 2 == 0) ? Parity::even : Parity::odd;
            expect(c, o.parities[static_cast<std::size_t>(i)] == expected,
                   "parity does not alternate at level " + num(i + 1));
        }
        for (int n = 1; n <= 4; ++n) {
            ModeEstimate m = mode_estimate(1.0, n);
            const double e = o.energies[static_cast<std::size_t>(n) - 1];
            expect(c, e > m.cs2_lower, "Ritz value below certified lower bound");
            expect(c, e >= m.E_tilde - m.err_simple - 1e-9,
                   "Ritz value below E_tilde - err at n=" + num(n));
        }
        RRConfig finer = cfg;
        finer.n_basis = 24;
        RROracle o2 = rr_solve(1.0, finer);
        expect(c, o2.energies[0] <= o.energies[0] + 1e-12,
               "ground level increased with basis growth");
    }));

    out.push_back(check("heat-trace-domination", [](CheckResult& c) {
        for (double t : {0.5, 1.0, 2.0}) {
            const double bound = heat_trace_upper(10.0, t);
            const double est = heat_trace_estimate(10.0, t);
            expect(c, bound >= est,
                   "bound " + num(bound) + " below estimate " + num(est) +
                       " at t=" + num(t));
        }
    }));

    return out;
}

} // namespace qrwell
