#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qrwell/spectrum.hpp"

namespace qrwell {

// Front end used by the command-line tool and by tests. A RunSpec describes
// one deterministic batch computation; run() executes it and serializes the
// result (json, csv or an aligned table) to the given stream.

enum class Subcommand {
    theta,     // phase shift on a list of wavenumbers
    modes,     // mu_tilde / energy estimates with error bounds
    bounds,    // comparison of all closed-form enclosures
    intervals, // certified disjoint eigenvalue intervals
    trace,     // heat-trace upper bound vs estimated trace
    eigfun,    // trial-mode summaries (norms, boundary data)
    oracle,    // Rayleigh-Ritz cross-check of the estimates
    validate,  // every module invariant, pass/fail per named check
    figures,   // CSV datasets behind the standard plots
};

enum class OutputFormat { json, csv, table };

struct RunSpec {
    Subcommand subcommand = Subcommand::validate;

    bool natural = true;   // exactly one of the two parameter sets applies
    NaturalParams nat{1.0};
    PhysicalParams phys{};

    int n_lo = 1, n_hi = 3;            // mode range, inclusive
    std::vector<double> mu_values;     // theta: wavenumbers (default grid)
    std::vector<double> t_values;      // trace: times (default {0.5, 1, 2})
    std::string which = "theta";       // figures: which dataset
    int n_basis = 64;                  // oracle: sine modes per parity block
    double tolerance = 0.0;            // optional quadrature override, 0 = default
    OutputFormat output = OutputFormat::table;
};

// Executes a parsed run; returns the process exit code:
//   0 success, 1 failed validation / violated invariant,
//   2 malformed request, 3 a quadrature or root search did not converge.
// Data goes to `os`, diagnostics to `err`.
int run(const RunSpec& spec, std::ostream& os, std::ostream& err);

// Natural half-width implied by the run's parameter set.
double spec_a_bar(const RunSpec& spec);

// One entry of the `validate` battery.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};
std::vector<CheckResult> run_validation(double a_bar);

} // namespace qrwell
