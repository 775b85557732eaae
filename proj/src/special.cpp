#include "qrwell/special.hpp"

#include <cmath>
#include <stdexcept>

namespace qrwell {

namespace {

// Chebyshev fits of g(t) = sqrt(x) e^x K1(x), computed from a 40-digit
// reference. Max relative error on either range is below 5e-20.
//
// Range A: x in [2, 8],   t = (16/x - 5)/3
constexpr double k1_cheb_a[] = {
    2.77443134069738829695,
    0.0757198995319936781709,
    -0.00144105155647540612299,
    0.0000665011695512574793943,
    -0.00000436998470952014076606,
    3.54027749976305267994e-7,
    -3.31116377929329202090e-8,
    3.44597758190105345323e-9,
    -3.89893234747542710490e-10,
    4.72081975046583564009e-11,
    -6.04783566287535623454e-12,
    8.12849487486587478882e-13,
    -1.13869457471478914289e-13,
    1.65403584084622823260e-14,
    -2.48090256770688482215e-15,
    3.82923789070240969484e-16,
    -6.06473410400124181878e-17,
    9.83242562326486160389e-18,
    -1.62841687382843800359e-18,
    2.75015364967526237142e-19,
};

// Range B: x in [8, inf), t = 16/x - 1
constexpr double k1_cheb_b[] = {
    2.56379308343739001037,
    0.0283288781304972093584,
    -0.000247537067390525034541,
    0.00000577197245160724882047,
    -2.06893921953654830275e-7,
    9.73998344138180418031e-9,
    -5.58533614038062498469e-10,
    3.73299663404618524022e-11,
    -2.82505196102322544514e-12,
    2.37201900248414417364e-13,
    -2.17667738799175397927e-14,
    2.15791416161603245394e-15,
    -2.29019693071826927599e-16,
    2.58288572982327496192e-17,
    -3.07675264126846318762e-18,
    3.85148772128049159710e-19,
};

template <std::size_t N>
double clenshaw(const double (&c)[N], double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = N - 1; i >= 1; --i) {
        const double b0 = 2.0 * t * b1 - b2 + c[i];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + 0.5 * c[0];
}

// K1 on (0, 2] from the ascending series
//   K1(x) = ln(x/2) I1(x) + 1/x - (x/4) Σ_k [ψ(k+1)+ψ(k+2)] q_k,
//   I1(x) = (x/2) Σ_k q_k,  q_k = (x²/4)^k / (k! (k+1)!).
double k1_series(double x) {
    constexpr double euler_gamma = 0.57721566490153286061;
    const double y = 0.25 * x * x;
    double q = 1.0;                         // q_k
    double psi = 1.0 - 2.0 * euler_gamma;   // ψ(k+1)+ψ(k+2) at k = 0
    double s_i1 = 0.0, s_psi = 0.0;
    for (int k = 0; k < 40; ++k) {
        s_i1 += q;
        s_psi += psi * q;
        const double next = q * y / ((k + 1.0) * (k + 2.0));
        if (next < 1e-19 * s_i1 && k > 2) break;
        psi += 1.0 / (k + 1.0) + 1.0 / (k + 2.0);
        q = next;
    }
    const double i1 = 0.5 * x * s_i1;
    return std::log(0.5 * x) * i1 + 1.0 / x - 0.25 * x * s_psi;
}

} // namespace

double bessel_k1(double x) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_k1: argument must be positive");
    if (x <= 2.0)
        return k1_series(x);
    double g;
    if (x <= 8.0)
        g = clenshaw(k1_cheb_a, (16.0 / x - 5.0) / 3.0);
    else
        g = clenshaw(k1_cheb_b, 16.0 / x - 1.0);
    return g * std::exp(-x) / std::sqrt(x);
}

double nu(double z) {
    if (z == 0.0)
        throw std::domain_error("nu: kernel is singular at z = 0");
    const double az = std::fabs(z);
    return bessel_k1(az) / (M_PI * az);
}

double nu0(double x, const QuadratureConfig& cfg) {
    if (!(x > 0.0))
        throw std::domain_error("nu0: x must be positive");
    auto f = [](double z) {
        // z^2 nu(z) = z K1(z)/pi -> 1/pi as z -> 0
        if (z < 1e-8) return 1.0 / M_PI;
        return z * bessel_k1(z) / M_PI;
    };
    return integrate(f, 0.0, x, cfg).value;
}

double nu_inf(double x, const QuadratureConfig& cfg) {
    if (!(x > 0.0))
        throw std::domain_error("nu_inf: x must be positive");
    auto f = [](double z) { return nu(z); };
    return integrate_to_inf(f, x, cfg).value;
}

double u(double x) { return (1.0 + x) * std::exp(-x); }

} // namespace qrwell
