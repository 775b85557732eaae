#include "doctest.h"

#include <cmath>
#include <complex>

#include "qrwell/quadrature.hpp"

using namespace qrwell;

TEST_CASE("smooth integrands at machine precision") {
    auto r1 = integrate([](double x) { return x; }, 0.0, 1.0);
    CHECK(r1.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r1.converged);

    auto r2 = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-13));

    auto r3 = integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(r3.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("integrable endpoint singularities") {
    auto r1 = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r1.converged);
    CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-9));

    auto r2 = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(r2.converged);
    CHECK(r2.value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("caller-supplied breakpoints handle interior kinks") {
    auto f = [](double x) { return std::fabs(x - 0.3); };
    auto r = integrate(f, {0.0, 0.3, 1.0});
    const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("semi-infinite range with exponential decay") {
    auto r = integrate_to_inf([](double x) { return std::exp(-x * x); }, 0.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-11));

    QuadratureConfig cfg;
    cfg.fixed_cutoff = 40.0;
    auto rc = integrate_to_inf([](double x) { return std::exp(-x); }, 0.0, cfg);
    CHECK(rc.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("principal value integrals") {
    // PV of 1/(x-1) over (0,3) = log 2
    auto r1 = integrate_pv([](double x) { return 1.0 / (x - 1.0); }, 1.0, 0.0, 3.0);
    CHECK(r1.value == doctest::Approx(std::log(2.0)).epsilon(1e-11));

    // PV of x/(x^2-1) over (0,2) = (1/2) log 3
    auto r2 =
        integrate_pv([](double x) { return x / (x * x - 1.0); }, 1.0, 0.0, 2.0);
    CHECK(r2.value == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-11));

    CHECK_THROWS_AS(integrate_pv([](double x) { return x; }, 5.0, 0.0, 1.0),
                    std::domain_error);
}

TEST_CASE("subdivision budget exhaustion is reported, not hidden") {
    QuadratureConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-14;
    cfg.max_subdivisions = 4;
    auto r = integrate([](double x) { return std::sin(100.0 / (x + 0.01)); }, 0.0,
                       1.0, cfg);
    CHECK_FALSE(r.converged);
}

TEST_CASE("complex-valued integrand") {
    auto f = [](double x) { return std::exp(std::complex<double>(0.0, x)); };
    auto r = integrate_complex(f, {0.0, 1.0});
    CHECK(r.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
    CHECK(r.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
}
