#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrwell/cli_report.hpp"
#include "qrwell/phase_shift.hpp"
#include "qrwell/spectrum.hpp"

using namespace qrwell;
using nlohmann::json;

namespace {

struct RunResult {
    int rc = -1;
    std::string out, err;
};

RunResult run_spec(const RunSpec& spec) {
    std::ostringstream os, es;
    RunResult r;
    r.rc = run(spec, os, es);
    r.out = os.str();
    r.err = es.str();
    return r;
}

}  // namespace

TEST_CASE("modes subcommand emits parseable JSON with correct values") {
    RunSpec spec;
    spec.subcommand = Subcommand::modes;
    spec.nat.a_bar = 1.0;
    spec.n_lo = 1;
    spec.n_hi = 3;
    spec.output = OutputFormat::json;
    const auto r = run_spec(spec);
    REQUIRE(r.rc == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("subcommand") == "modes");
    REQUIRE(doc.at("rows").size() == 3);
    CHECK(doc["rows"][0].at("mu_tilde").get<double>() ==
          doctest::Approx(1.295226057).epsilon(1e-8));
    CHECK(doc["rows"][0].at("parity") == "even");
    CHECK(doc["rows"][1].at("parity") == "odd");
    CHECK(doc.at("meta").at("a_bar") == 1.0);
}

TEST_CASE("JSON serialization round-trips doubles bit-exactly") {
    RunSpec spec;
    spec.subcommand = Subcommand::modes;
    spec.nat.a_bar = 10.0;
    spec.n_lo = 1;
    spec.n_hi = 4;
    spec.output = OutputFormat::json;
    const auto r = run_spec(spec);
    REQUIRE(r.rc == 0);
    const json doc = json::parse(r.out);
    for (const auto& row : doc.at("rows")) {
        const int n = row.at("n").get<int>();
        const auto m = mode_estimate(10.0, n);
        CHECK(row.at("mu_tilde").get<double>() == m.mu_tilde);  // bitwise
        CHECK(row.at("E_tilde").get<double>() == m.E_tilde);
    }
}

TEST_CASE("theta subcommand rows match the library") {
    RunSpec spec;
    spec.subcommand = Subcommand::theta;
    spec.mu_values = {0.5, 1.0, 5.0};
    spec.output = OutputFormat::json;
    const auto r = run_spec(spec);
    REQUIRE(r.rc == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc.at("rows").size() == 3);
    for (const auto& row : doc.at("rows")) {
        const double mu = row.at("mu").get<double>();
        CHECK(row.at("theta").get<double>() == theta_value(mu));
        CHECK(row.at("lower").get<double>() <= row.at("theta").get<double>());
        CHECK(row.at("theta").get<double>() <= row.at("upper").get<double>());
    }
}

TEST_CASE("figures emit CSV with a monotone phase-shift curve") {
    RunSpec spec;
    spec.subcommand = Subcommand::figures;
    spec.which = "theta";
    const auto r = run_spec(spec);
    REQUIRE(r.rc == 0);
    std::istringstream in(r.out);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "mu,theta");
    std::vector<double> thetas;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        thetas.push_back(std::stod(line.substr(comma + 1)));
    }
    REQUIRE(thetas.size() > 100);
    for (std::size_t i = 1; i < thetas.size(); ++i)
        CHECK(thetas[i] > thetas[i - 1]);
    CHECK(thetas.front() < 0.01);
    CHECK(thetas.back() > 0.39);  // approaching pi/8
}

TEST_CASE("table output renders rows and a meta trailer") {
    RunSpec spec;
    spec.subcommand = Subcommand::modes;
    spec.nat.a_bar = 2.0;
    spec.output = OutputFormat::table;
    const auto r = run_spec(spec);
    REQUIRE(r.rc == 0);
    CHECK(r.out.find("mu_tilde") != std::string::npos);
    CHECK(r.out.find("# meta") != std::string::npos);
}

TEST_CASE("malformed specs exit with code 2") {
    RunSpec bad_range;
    bad_range.subcommand = Subcommand::modes;
    bad_range.n_lo = 0;
    CHECK(run_spec(bad_range).rc == 2);

    RunSpec swapped;
    swapped.subcommand = Subcommand::modes;
    swapped.n_lo = 5;
    swapped.n_hi = 2;
    CHECK(run_spec(swapped).rc == 2);

    RunSpec unknown_figure;
    unknown_figure.subcommand = Subcommand::figures;
    unknown_figure.which = "nosuch";
    const auto r = run_spec(unknown_figure);
    CHECK(r.rc == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("validation battery passes end to end") {
    const auto checks = run_validation(3.0);
    REQUIRE_FALSE(checks.empty());
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}
