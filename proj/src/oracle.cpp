#include "qrwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "qrwell/errors.hpp"
#include "qrwell/quadrature.hpp"

namespace qrwell {

namespace {

constexpr double pi = 3.14159265358979323846;

double sinc(double z) {
    if (std::fabs(z) < 1e-4) return 1.0 - z * z / 6.0;
    return std::sin(z) / z;
}

int sine_sign(int l) { return (l % 4 == 1 || l % 4 == 2) ? 1 : -1; }

// antiderivative pieces for the non-oscillatory tail
double lambda_log(double xi, double om) {
    const double a = xi * std::hypot(1.0, om);
    const double b = om * std::hypot(1.0, xi);
    return std::log((a - b) / (a + b));
}

// ∫_X^∞ sqrt(1+x^2)/((x^2-wj^2)(x^2-wk^2)) dx for X > wj, wk, wj != wk
double tail0_pair(double X, double wj, double wk) {
    auto c = [](double w) { return std::hypot(1.0, w) / (2.0 * w); };
    const double d_inf = -(std::hypot(1.0, wj) * std::asinh(wj) / wj -
                           std::hypot(1.0, wk) * std::asinh(wk) / wk);
    const double d_X = c(wj) * lambda_log(X, wj) - c(wk) * lambda_log(X, wk);
    return (d_inf - d_X) / ((wj - wk) * (wj + wk));
}

// ∫_X^∞ sqrt(1+x^2)/(x^2-w^2)^2 dx for X > w
double tail0_diag(double X, double w) {
    const double f_inf = std::asinh(w) / (2.0 * w * w * w * std::hypot(1.0, w)) -
                         1.0 / (2.0 * w * w);
    const double f_X = -lambda_log(X, w) / (4.0 * w * w * w * std::hypot(1.0, w)) -
                       X * std::hypot(1.0, X) / (2.0 * w * w * (X - w) * (X + w));
    return f_inf - f_X;
}

struct SlowAmplitude { // W(x) = sqrt(1+x^2)/((x^2-wj^2)(x^2-wk^2)) and W'
    double w = 0.0, wp = 0.0;
};
SlowAmplitude slow_amplitude(double x, double wj, double wk) {
    const double pj = (x - wj) * (x + wj), pk = (x - wk) * (x + wk);
    const double p = 1.0 / (pj * pk);
    const double root = std::hypot(1.0, x);
    SlowAmplitude s;
    s.w = root * p;
    s.wp = x / root * p - root * p * (2.0 * x / pj + 2.0 * x / pk);
    return s;
}

} // namespace

EntryResult rr_matrix_entry(double a_bar, int j, int k, double tol) {
    if (!(a_bar > 0.0))
        throw std::domain_error("rr_matrix_entry: a_bar must be positive");
    if (j < 1 || k < 1)
        throw std::domain_error("rr_matrix_entry: labels must be >= 1");
    if ((j + k) % 2 != 0)
        return {0.0, 0.0}; // opposite parity: exact zero by symmetry

    const double wj = j * pi / (2.0 * a_bar);
    const double wk = k * pi / (2.0 * a_bar);
    const double ss = sine_sign(j) * sine_sign(k);
    const double pref = 4.0 * wj * wk * a_bar / pi * ss;

    // Head (0, X): fixed Gauss-Kronrod panels a quarter oscillation long,
    // exact to machine precision for this analytic integrand. X is a whole
    // number of panels past 2*max(omega) + 20 and is then pushed further
    // until the oscillatory-tail remainder fits the entry budget. X depends
    // only on (j, k, a_bar, tol), never on the matrix size, so blocks of
    // different sizes nest exactly.
    const double h = pi / (2.0 * a_bar);
    const double tail_pref = 2.0 * wj * wk / (pi * a_bar); // |..| of tail scale
    long m = static_cast<long>(std::ceil((2.0 * std::max(wj, wk) + 20.0) / h));
    const long m_hard = 8 * m + 4000;
    double X = m * h;
    auto remainder_bound = [&](double x) {
        return tail_pref * std::fabs(slow_amplitude(x, wj, wk).wp) /
               (4.0 * a_bar * a_bar);
    };
    while (remainder_bound(X) > 0.25 * tol && m < m_hard) {
        m += std::max<long>(static_cast<long>(std::ceil(20.0 / h)), m / 2);
        X = m * h;
    }

    auto f = [&](double xi) {
        return std::hypot(1.0, xi) * sinc(a_bar * (xi - wj)) * sinc(a_bar * (xi - wk)) /
               ((xi + wj) * (xi + wk));
    };
    double head = 0.0, head_err = 0.0;
    for (long i = 0; i < m; ++i) {
        double v, e;
        detail::gk15(f, i * h, (i + 1) * h, v, e);
        head += v;
        head_err += e;
    }

    // Tail (X, ∞): with psi = a(2 xi - wj - wk) and the constant
    // c_jk = cos((j-k) pi/2), the product of sines splits into
    // (c_jk - cos psi)/2 times the slowly varying amplitude W.
    const double c_jk = ((j - k) % 4 == 0) ? 1.0 : -1.0;
    const double t0 = (j == k) ? tail0_diag(X, wj) : tail0_pair(X, wj, wk);
    const SlowAmplitude s = slow_amplitude(X, wj, wk);
    const double psi = a_bar * (2.0 * X - wj - wk);
    const double t_osc = -s.w * std::sin(psi) / (2.0 * a_bar) +
                         s.wp * std::cos(psi) / (4.0 * a_bar * a_bar);
    const double tail = tail_pref * ss * (c_jk * t0 - t_osc);

    EntryResult r;
    r.value = pref * head + tail;
    r.error = std::fabs(pref) * head_err + remainder_bound(X) * 2.0;
    return r;
}

RRBlock rr_assemble_block(double a_bar, Parity parity, const RRConfig& cfg) {
    if (cfg.n_basis < 2)
        throw std::domain_error("rr_assemble_block: n_basis must be >= 2");
    RRBlock blk;
    blk.parity = parity;
    blk.k_index.resize(cfg.n_basis);
    const int first = (parity == Parity::even) ? 1 : 2; // odd k <-> even modes
    for (int i = 0; i < cfg.n_basis; ++i) blk.k_index[i] = first + 2 * i;

    const int n = cfg.n_basis;
    blk.h = SymMatrix(n);
    std::vector<double> row_err_sq(n, 0.0);

    int threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 2;
    threads = std::min(threads, n);

    auto work = [&](int t) {
        double err_sq = 0.0;
        for (int i = t; i < n; i += threads) {
            for (int jj = i; jj < n; ++jj) {
                EntryResult e =
                    rr_matrix_entry(a_bar, blk.k_index[i], blk.k_index[jj], cfg.entry_tol);
                blk.h(i, jj) = e.value;
                blk.h(jj, i) = e.value;
                err_sq += (i == jj ? 1.0 : 2.0) * e.error * e.error;
            }
        }
        return err_sq;
    };

    std::vector<std::future<double>> futs;
    futs.reserve(threads);
    for (int t = 0; t < threads; ++t)
        futs.push_back(std::async(std::launch::async, work, t));
    double err_sq = 0.0;
    for (auto& fu : futs) err_sq += fu.get();
    blk.entry_error_frobenius = std::sqrt(err_sq);
    blk.eig = jacobi_eigh(blk.h);
    return blk;
}

RROracle rr_solve(double a_bar, const RRConfig& cfg) {
    if (!(a_bar > 0.0))
        throw std::domain_error("rr_solve: a_bar must be positive");
    RROracle o;
    o.a_bar = a_bar;
    o.cfg = cfg;
    o.even_block = rr_assemble_block(a_bar, Parity::even, cfg);
    o.odd_block = rr_assemble_block(a_bar, Parity::odd, cfg);

    for (const RRBlock* blk : {&o.even_block, &o.odd_block})
        for (double e : blk->eig.values)
            if (!(e > 1.0))
                throw ConsistencyError(
                    "rr_solve: Ritz value at or below the rest energy");

    struct Tag {
        double e;
        Parity p;
        double err;
    };
    std::vector<Tag> all;
    all.reserve(2 * static_cast<std::size_t>(cfg.n_basis));
    for (const RRBlock* blk : {&o.even_block, &o.odd_block})
        for (double e : blk->eig.values)
            all.push_back({e, blk->parity, blk->entry_error_frobenius});
    std::sort(all.begin(), all.end(), [](const Tag& x, const Tag& y) { return x.e < y.e; });
    for (const Tag& t : all) {
        o.energies.push_back(t.e);
        o.parities.push_back(t.p);
        o.eigenvalue_error.push_back(t.err);
    }
    return o;
}

std::function<double(double)> rr_eigenfunction(const RROracle& o, int n) {
    if (n < 1 || n > static_cast<int>(o.energies.size()))
        throw std::domain_error("rr_eigenfunction: level out of range");
    // Locate level n inside its parity block: it is the m-th level of that
    // parity among the merged list.
    const Parity p = o.parities[static_cast<std::size_t>(n) - 1];
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (o.parities[static_cast<std::size_t>(i)] == p) ++m;
    const RRBlock& blk = (p == Parity::even) ? o.even_block : o.odd_block;
    std::vector<double> coeff = blk.eig.vectors[static_cast<std::size_t>(m) - 1];
    std::vector<int> ks = blk.k_index;
    const double a = o.a_bar;
    return [coeff = std::move(coeff), ks = std::move(ks), a](double x) {
        if (std::fabs(x) >= a) return 0.0;
        const double u = (x + a) * pi / (2.0 * a);
        double s = 0.0;
        for (std::size_t i = 0; i < ks.size(); ++i)
            s += coeff[i] * std::sin(ks[i] * u);
        return s / std::sqrt(a);
    };
}

WaveComparison rr_compare(const RROracle& o, int n, const WaveApprox& w,
                          int grid_points) {
    auto phi = rr_eigenfunction(o, n);
    const double a = o.a_bar;

    double inner = 0.0;
    const int coarse = 801;
    for (int i = 0; i < coarse; ++i) {
        const double x = -a + (2.0 * a) * (i + 0.5) / coarse;
        inner += phi(x) * w(x);
    }
    WaveComparison cmp;
    cmp.sign = (inner >= 0.0) ? 1.0 : -1.0;

    auto diff2 = [&](double x) {
        const double d = cmp.sign * phi(x) - w(x);
        return d * d;
    };
    QuadratureConfig qc;
    qc.abs_tol = 1e-12;
    qc.rel_tol = 1e-9;
    Integral l2 = integrate(diff2, {-a, -a / 3.0, 0.0, a / 3.0, a}, qc);
    cmp.l2_distance = std::sqrt(std::max(0.0, l2.value));

    for (int i = 0; i < grid_points; ++i) {
        const double x = -a + (2.0 * a) * i / (grid_points - 1.0);
        const double pv = cmp.sign * phi(x);
        cmp.sup_distance = std::max(cmp.sup_distance, std::fabs(pv - w(x)));
        cmp.sup_oracle = std::max(cmp.sup_oracle, std::fabs(pv));
    }
    return cmp;
}

WeylFit rr_weyl_fit(const RROracle& o, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo || n_hi > static_cast<int>(o.energies.size()))
        throw std::domain_error("rr_weyl_fit: bad level window");
    WeylFit fit;
    double s00 = 0.0, s01 = 0.0, s11 = 0.0, b0 = 0.0, b1 = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double e = o.energies[static_cast<std::size_t>(n) - 1];
        WeylRow row;
        row.n = n;
        row.energy = e;
        row.residual = e * o.a_bar - n * pi / 2.0;
        const double mu = std::sqrt(std::max(0.0, (e - 1.0) * (e + 1.0)));
        row.mass_corrected = o.a_bar * mu - n * pi / 2.0;
        fit.rows.push_back(row);

        const double t = 1.0 / n;
        s00 += 1.0;
        s01 += t;
        s11 += t * t;
        b0 += row.mass_corrected;
        b1 += row.mass_corrected * t;
    }
    const double det = s00 * s11 - s01 * s01;
    if (std::fabs(det) < 1e-14) {
        fit.phase = b0 / s00;
        fit.slope = 0.0;
    } else {
        fit.phase = (s11 * b0 - s01 * b1) / det;
        fit.slope = (s00 * b1 - s01 * b0) / det;
    }
    return fit;
}

} // namespace qrwell
