#pragma once

#include <vector>

namespace qrwell {

// Dense real symmetric matrix, row-major, sized for the few-hundred-row
// Rayleigh-Ritz blocks used by the variational oracle.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double frobenius_norm() const;
    double max_symmetry_defect() const; // max |a_ij - a_ji|

  private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values;               // ascending
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
    int sweeps = 0;                           // Jacobi sweeps used
};

// Cyclic Jacobi diagonalization with eigenvectors. Throws ConvergenceError if
// the off-diagonal mass has not dropped below tol * ||A||_F in max_sweeps
// sweeps. Accuracy is O(eps ||A||) per eigenvalue, ample for the oracle.
EigenDecomposition jacobi_eigh(SymMatrix a, int max_sweeps = 64, double tol = 1e-14);

} // namespace qrwell
