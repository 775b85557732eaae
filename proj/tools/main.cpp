#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qrwell/cli_report.hpp"

namespace {

// "3..8" or "5" -> [lo, hi]
bool parse_range(const std::string& s, int& lo, int& hi) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(s);
        } else {
            lo = std::stoi(s.substr(0, dots));
            hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-relativistic square-well spectral toolkit"};
    app.require_subcommand(1);

    qrwell::RunSpec spec;
    std::string n_range = "1..3";
    std::string output = "table";
    std::string out_path;
    std::string preset;
    double width_pm = 0.0;
    double a_bar = 0.0;
    bool have_natural = false, have_physical = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", n_range, "mode range, e.g. 4 or 1..6");
        sub->add_option("--output", output, "json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--out", out_path, "write data to a file instead of stdout");
        sub->add_option("--tol", spec.tolerance, "quadrature tolerance override");
        auto* nat = sub->add_option_group("natural units");
        nat->add_option("--natural", a_bar, "dimensionless half-width m c a / hbar")
            ->each([&](const std::string&) { have_natural = true; });
        auto* phys = sub->add_option_group("physical units");
        phys->add_option("--hbar", spec.phys.hbar, "reduced Planck constant")
            ->each([&](const std::string&) { have_physical = true; });
        phys->add_option("--c", spec.phys.c, "speed of light")
            ->each([&](const std::string&) { have_physical = true; });
        phys->add_option("--m", spec.phys.m, "particle mass")
            ->each([&](const std::string&) { have_physical = true; });
        phys->add_option("--a", spec.phys.a, "well half-width")
            ->each([&](const std::string&) { have_physical = true; });
        sub->add_option("--preset", preset, "named scenario: electron")
            ->check(CLI::IsMember({"electron"}));
        sub->add_option("--width-pm", width_pm,
                        "full well width in picometres (with --preset electron)");
    };

    auto* c_theta = app.add_subcommand("theta", "phase shift and its bounds");
    c_theta->add_option("--mu", spec.mu_values, "wavenumbers (default: log grid)");
    auto* c_modes = app.add_subcommand("modes", "mode wavenumbers and energies");
    auto* c_bounds = app.add_subcommand("bounds", "all closed-form enclosures");
    auto* c_intervals = app.add_subcommand("intervals", "certified disjoint intervals");
    auto* c_trace = app.add_subcommand("trace", "heat-trace upper bound check");
    c_trace->add_option("--t", spec.t_values, "times (default: 0.5 1 2)");
    auto* c_eigfun = app.add_subcommand("eigfun", "trial-mode diagnostics");
    auto* c_oracle = app.add_subcommand("oracle", "Rayleigh-Ritz cross-check");
    c_oracle->add_option("--n-basis", spec.n_basis, "sine modes per parity block");
    auto* c_validate = app.add_subcommand("validate", "run every invariant check");
    auto* c_figures = app.add_subcommand("figures", "emit CSV plot datasets");
    c_figures->add_option(
        "--which", spec.which,
        "theta | phase-lines | profiles | phitilde | intervals");

    for (CLI::App* sub : {c_theta, c_modes, c_bounds, c_intervals, c_trace, c_eigfun,
                          c_oracle, c_validate, c_figures})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help/version exit cleanly, usage errors as 2
    }

    using qrwell::Subcommand;
    if (app.got_subcommand(c_theta)) spec.subcommand = Subcommand::theta;
    if (app.got_subcommand(c_modes)) spec.subcommand = Subcommand::modes;
    if (app.got_subcommand(c_bounds)) spec.subcommand = Subcommand::bounds;
    if (app.got_subcommand(c_intervals)) spec.subcommand = Subcommand::intervals;
    if (app.got_subcommand(c_trace)) spec.subcommand = Subcommand::trace;
    if (app.got_subcommand(c_eigfun)) spec.subcommand = Subcommand::eigfun;
    if (app.got_subcommand(c_oracle)) spec.subcommand = Subcommand::oracle;
    if (app.got_subcommand(c_validate)) spec.subcommand = Subcommand::validate;
    if (app.got_subcommand(c_figures)) spec.subcommand = Subcommand::figures;

    if (!parse_range(n_range, spec.n_lo, spec.n_hi)) {
        std::cerr << "usage: bad --n range '" << n_range << "'\n";
        return 2;
    }
    spec.output = output == "json"  ? qrwell::OutputFormat::json
                  : output == "csv" ? qrwell::OutputFormat::csv
                                    : qrwell::OutputFormat::table;

    if (preset == "electron") {
        // hbar, c in SI; electron mass; half-width from the full width in pm.
        spec.phys.hbar = 1.054571817e-34;
        spec.phys.c = 2.99792458e8;
        spec.phys.m = 9.1093837015e-31;
        spec.phys.a = (width_pm > 0.0 ? width_pm : 0.772) * 1e-12 / 2.0;
        have_physical = true;
    }
    if (have_natural && have_physical) {
        std::cerr << "usage: give either --natural or physical constants, not both\n";
        return 2;
    }
    if (have_natural) {
        spec.natural = true;
        spec.nat.a_bar = a_bar;
    } else if (have_physical) {
        spec.natural = false;
    } // else keep the default natural a_bar = 1

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "usage: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        return qrwell::run(spec, file, std::cerr);
    }
    return qrwell::run(spec, std::cout, std::cerr);
}
