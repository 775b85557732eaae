#include "qrwell/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrwell/errors.hpp"

namespace qrwell {

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_symmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            d = std::max(d, std::fabs((*this)(i, j) - (*this)(j, i)));
    return d;
}

EigenDecomposition jacobi_eigh(SymMatrix a, int max_sweeps, double tol) {
    const int n = a.size();
    EigenDecomposition out;
    if (n == 0) return out;

    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double norm = a.frobenius_norm();
    const double stop = tol * std::max(norm, 1e-300);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    for (; sweep < max_sweeps && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= 0.1 * stop / n) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double& vkp = v[static_cast<std::size_t>(k) * n + p];
                    double& vkq = v[static_cast<std::size_t>(k) * n + q];
                    const double tp = vkp, tq = vkq;
                    vkp = c * tp - s * tq;
                    vkq = s * tp + c * tq;
                }
            }
        }
    }
    if (off_norm() > stop)
        throw ConvergenceError("jacobi_eigh: off-diagonal norm did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i) < a(j, j); });

    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        const int j = order[k];
        out.values[k] = a(j, j);
        for (int i = 0; i < n; ++i)
            out.vectors[k][i] = v[static_cast<std::size_t>(i) * n + j];
    }
    out.sweeps = sweep;
    return out;
}

} // namespace qrwell
