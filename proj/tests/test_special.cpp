#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "qrwell/quadrature.hpp"
#include "qrwell/special.hpp"
#include "qrwell/spectrum.hpp"

using namespace qrwell;

TEST_CASE("modified Bessel K1 against high-precision references") {
    // Reference values computed with 50-digit arbitrary-precision arithmetic.
    struct Ref {
        double x, k1;
    };
    const Ref refs[] = {
        {1e-6, 999999.99999278427896},
        {0.1, 9.8538447808706061348},
        {1.0, 0.60190723019723457474},
        {2.0, 0.13986588181652242728},
        {5.0, 0.0040446134454521642084},
        {10.0, 1.8648773453825584597e-5},
        {100.0, 4.6798537356369092866e-45},
        {700.0, 4.6731107967079661091e-306},
    };
    for (const auto& r : refs) {
        CAPTURE(r.x);
        CHECK(bessel_k1(r.x) == doctest::Approx(r.k1).epsilon(1e-13));
    }
}

TEST_CASE("K1 is continuous across the series/asymptotic switch") {
    // Straddle x = 2 where the evaluation strategy changes.
    const double below = bessel_k1(1.999999999);
    const double above = bessel_k1(2.000000001);
    CHECK(below == doctest::Approx(0.13986588200034924108).epsilon(1e-13));
    CHECK(above == doctest::Approx(0.13986588163269561376).epsilon(1e-13));
    CHECK(std::fabs(below - above) < 1e-8);
}

TEST_CASE("K1 matches its integral representation") {
    // K1(x) = \int_0^\infty e^{-x cosh t} cosh t dt
    for (double x : {0.3, 1.5, 4.0}) {
        CAPTURE(x);
        auto r = integrate_to_inf(
            [x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(t); },
            0.0);
        REQUIRE(r.converged);
        CHECK(bessel_k1(x) == doctest::Approx(r.value).epsilon(1e-9));
    }
}

TEST_CASE("multiplier density nu: symmetry and domain") {
    CHECK(nu(0.7) == doctest::Approx(nu(-0.7)).epsilon(1e-15));
    CHECK(nu(2.0) > 0.0);
    CHECK_THROWS_AS(nu(0.0), std::domain_error);
}

TEST_CASE("small-argument multiplier profile nu0") {
    CHECK(nu0(0.5) == doctest::Approx(0.14798003324399756913).epsilon(1e-10));
    CHECK(nu0(2.0) == doctest::Approx(0.39657846391833362703).epsilon(1e-10));
    // saturates at 1/2 for large argument
    CHECK(nu0(50.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(nu0(70.0) <= 0.5 + 1e-12);
}

TEST_CASE("scaled tail profile nu_inf") {
    CHECK(nu_inf(0.5) == doctest::Approx(0.32236748229670092323).epsilon(1e-10));
    CHECK(nu_inf(1.0) == doctest::Approx(0.087096190434956265323).epsilon(1e-10));
    CHECK(nu_inf(5.0) == doctest::Approx(0.00020234239413414305143).epsilon(1e-8));
    // strictly decreasing tail
    CHECK(nu_inf(1.0) < nu_inf(0.5));
    CHECK(nu_inf(5.0) < nu_inf(1.0));
}

TEST_CASE("profile function u is positive and bounded by 1") {
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        CAPTURE(x);
        const double v = u(x);
        CHECK(v > 0.0);
        CHECK(v <= 1.0 + 1e-12);
    }
}

TEST_CASE("nu reproduces the dispersion symbol via its cosine transform") {
    // 2 \int_0^\infty (1 - cos(xi z)) nu(z) dz = sqrt(1+xi^2) - 1
    const double xi = 2.0;
    auto f = [xi](double z) { return (1.0 - std::cos(xi * z)) * nu(z); };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-13;
    auto head = integrate(f, {1e-12, 1.0 / xi, 1.0, 5.0}, cfg);
    auto tail = integrate_to_inf(f, 5.0, cfg);
    const double lhs = 2.0 * (head.value + tail.value);
    CHECK(lhs == doctest::Approx(w_dispersion(xi * xi)).epsilon(1e-8));
}
