#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <vector>

#include "qrwell/errors.hpp"

namespace qrwell {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    // Semi-infinite integrals: if fixed_cutoff > 0 the range is truncated
    // there; otherwise segments of geometrically growing length are appended
    // until a whole segment contributes less than a tenth of the tolerance.
    double fixed_cutoff = 0.0;
};

struct Integral {
    double value = 0.0;
    double error = 0.0;     // estimated absolute error (incl. any tail bound)
    bool converged = true;  // false when the subdivision budget ran out
};

struct ComplexIntegral {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
double vnorm(const T& v) {
    if constexpr (std::is_same_v<T, std::complex<double>>)
        return std::abs(v);
    else
        return std::fabs(v);
}

template <class F>
struct Segment {
    using value_type = std::invoke_result_t<F&, double>;
    double a, b;
    value_type val{};
    double err = 0.0;
};

// One GK15 application on [a,b]; returns (value, error estimate).
template <class F>
void gk15(F& f, double a, double b,
          std::invoke_result_t<F&, double>& value, double& error) {
    using T = std::invoke_result_t<F&, double>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    T fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[2 * i] = f(c - h * gk_nodes[i]);
        fv[2 * i + 1] = f(c + h * gk_nodes[i]);
    }
    fv[14] = f(c);

    T resk = gk_wk[7] * fv[14];
    T resg = gk_wg[3] * fv[14];
    double resabs = gk_wk[7] * vnorm(fv[14]);
    for (int i = 0; i < 7; ++i) {
        resk += gk_wk[i] * (fv[2 * i] + fv[2 * i + 1]);
        resabs += gk_wk[i] * (vnorm(fv[2 * i]) + vnorm(fv[2 * i + 1]));
    }
    // Gauss nodes sit at the odd Kronrod abscissae.
    for (int i = 0; i < 3; ++i) {
        const int j = 2 * i + 1;
        resg += gk_wg[i] * (fv[2 * j] + fv[2 * j + 1]);
    }

    const T reskh = resk * 0.5;
    double resasc = gk_wk[7] * vnorm(fv[14] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += gk_wk[i] * (vnorm(fv[2 * i] - reskh) + vnorm(fv[2 * i + 1] - reskh));

    value = resk * h;
    resabs *= std::fabs(h);
    resasc *= std::fabs(h);
    error = vnorm((resk - resg) * h);
    if (resasc != 0.0 && error != 0.0)
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        error = std::max(error, eps50 * resabs);
}

// Worst-segment-first adaptive refinement over a list of seed intervals.
template <class F>
auto adaptive(F& f, const std::vector<double>& breaks, const QuadratureConfig& cfg) {
    using T = std::invoke_result_t<F&, double>;
    struct Result {
        T value{};
        double error = 0.0;
        bool converged = true;
    };

    std::vector<Segment<F>> segs;
    segs.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 2);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Segment<F> s;
        s.a = breaks[i];
        s.b = breaks[i + 1];
        if (s.a == s.b) continue;
        gk15(f, s.a, s.b, s.val, s.err);
        segs.push_back(s);
    }

    auto total = [&segs]() {
        T v{};
        double e = 0.0;
        for (const auto& s : segs) {
            v += s.val;
            e += s.err;
        }
        return std::pair<T, double>(v, e);
    };

    Result out;
    while (true) {
        auto [v, e] = total();
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * vnorm(v));
        if (e <= tol) {
            out.value = v;
            out.error = e;
            return out;
        }
        if (static_cast<int>(segs.size()) >= cfg.max_subdivisions) {
            out.value = v;
            out.error = e;
            out.converged = false;
            return out;
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        Segment<F> left = segs[worst], right;
        const double mid = 0.5 * (left.a + left.b);
        if (mid <= left.a || mid >= left.b) {
            // interval no longer splittable in double precision
            out.value = v;
            out.error = e;
            out.converged = e <= 10.0 * tol;
            return out;
        }
        right.a = mid;
        right.b = left.b;
        left.b = mid;
        gk15(f, left.a, left.b, left.val, left.err);
        gk15(f, right.a, right.b, right.val, right.err);
        segs[worst] = left;
        segs.push_back(right);
    }
}

} // namespace detail

// Definite integral of f over (lo, hi). Endpoints are never evaluated, so
// integrable endpoint singularities are acceptable.
template <class F>
Integral integrate(F&& f, double lo, double hi, const QuadratureConfig& cfg = {}) {
    auto r = detail::adaptive(f, std::vector<double>{lo, hi}, cfg);
    return {r.value, r.error, r.converged};
}

// Same, but with caller-supplied interior breakpoints (kinks, scale changes).
template <class F>
Integral integrate(F&& f, const std::vector<double>& breaks, const QuadratureConfig& cfg = {}) {
    auto r = detail::adaptive(f, breaks, cfg);
    return {r.value, r.error, r.converged};
}

template <class F>
ComplexIntegral integrate_complex(F&& f, const std::vector<double>& breaks,
                                  const QuadratureConfig& cfg = {}) {
    auto r = detail::adaptive(f, breaks, cfg);
    return {r.value, r.error, r.converged};
}

// Integral of f over (lo, +inf) for integrands with (at least) exponential-ish
// decay. The range is extended geometrically; the magnitude of the last,
// sub-tolerance segment is charged to the error estimate as a tail proxy.
// Callers with a rigorous analytic tail bound should pass a fixed_cutoff and
// add their own bound instead.
template <class F>
Integral integrate_to_inf(F&& f, double lo, const QuadratureConfig& cfg = {}) {
    if (cfg.fixed_cutoff > lo)
        return integrate(f, lo, cfg.fixed_cutoff, cfg);

    Integral acc;
    double a = lo, len = 1.0;
    QuadratureConfig seg_cfg = cfg;
    seg_cfg.max_subdivisions = std::max(64, cfg.max_subdivisions / 8);
    for (int k = 0; k < 64; ++k) {
        const double b = a + len;
        Integral part = integrate(f, a, b, seg_cfg);
        acc.value += part.value;
        acc.error += part.error;
        acc.converged = acc.converged && part.converged;
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(acc.value));
        if (std::fabs(part.value) + part.error < 0.1 * tol && k > 0) {
            acc.error += std::fabs(part.value);
            return acc;
        }
        a = b;
        len *= 2.0;
    }
    acc.converged = false;
    return acc;
}

// Cauchy principal value of ∫ f over (lo, hi) with a single simple pole at
// `pole` in the interior. The symmetric window (pole-r, pole+r) is folded to
// t ∈ (0, r) as f(pole+t)+f(pole-t), cancelling the pole analytically; the
// leftover one-sided piece is integrated as usual.
template <class F>
Integral integrate_pv(F&& f, double pole, double lo, double hi,
                      const QuadratureConfig& cfg = {}) {
    if (!(lo < pole && pole < hi))
        throw std::domain_error("integrate_pv: pole must lie strictly inside (lo, hi)");
    const double r = std::min(pole - lo, hi - pole);
    auto folded = [&f, pole](double t) { return f(pole + t) + f(pole - t); };
    Integral sym = integrate(folded, 0.0, r, cfg);
    Integral rest;
    if (pole - r > lo)
        rest = integrate(f, lo, pole - r, cfg);
    else if (pole + r < hi)
        rest = integrate(f, pole + r, hi, cfg);
    return {sym.value + rest.value, sym.error + rest.error,
            sym.converged && rest.converged};
}

} // namespace qrwell
