#pragma once

#include <functional>
#include <vector>

#include "qrwell/dense.hpp"
#include "qrwell/eigenfunctions.hpp"
#include "qrwell/spectrum.hpp"

namespace qrwell {

// Independent Rayleigh-Ritz check of the spectral estimates: diagonalize the
// operator sqrt(1 - d^2/dx^2) with Dirichlet-type confinement to (-a, a) in
// the orthonormal sine basis
//     e_k(x) = a^{-1/2} sin(k pi (x+a)/(2a)),   omega_k = k pi/(2a),
// using Fourier-side matrix elements
//     M_jk = (4 omega_j omega_k a / pi) ∫_0^∞ sqrt(1+xi^2)
//            sinc(a(xi-omega_j)) sinc(a(xi-omega_k)) /
//            ((xi+omega_j)(xi+omega_k)) dxi * s_j s_k,
// where s_l = +1 if l mod 4 in {1,2} and -1 otherwise. Odd k give even
// modes, even k give odd modes, so the two parity blocks decouple and are
// assembled separately. By the min-max principle every Ritz value is an
// upper bound for the matching eigenvalue, up to the accumulated entry error.

struct RRConfig {
    int n_basis = 128;        // sine modes per parity block
    double entry_tol = 1e-10; // absolute error budget per matrix entry
    int threads = 0;          // rows assembled concurrently; 0 = hardware
};

struct RRBlock {
    Parity parity = Parity::even;
    std::vector<int> k_index;            // sine-basis labels in this block
    SymMatrix h;                         // Rayleigh-Ritz matrix
    double entry_error_frobenius = 0.0;  // Frobenius norm of the entry errors
    EigenDecomposition eig;
};

struct RROracle {
    double a_bar = 0.0;
    RRConfig cfg;
    RRBlock even_block, odd_block;
    // Merged spectrum, ascending; parities[i] tags energies[i]. The
    // eigenvalue_error[i] is the Weyl perturbation bound carried over from
    // the entry errors of the block that produced level i.
    std::vector<double> energies;
    std::vector<Parity> parities;
    std::vector<double> eigenvalue_error;
};

// Matrix element M_jk (j, k are 1-based sine labels of equal parity).
// Returns value and a rigorous-style error estimate (quadrature estimate
// plus the analytic remainder of the oscillatory tail).
struct EntryResult {
    double value = 0.0;
    double error = 0.0;
};
EntryResult rr_matrix_entry(double a_bar, int j, int k, double tol = 1e-10);

// Assembles and diagonalizes one parity block.
RRBlock rr_assemble_block(double a_bar, Parity parity, const RRConfig& cfg = {});

// Full solve: assemble both parity blocks, diagonalize, merge.
// Throws ConsistencyError if any Ritz value fails the hard lower bound
// (every energy must exceed the rest energy 1).
RROracle rr_solve(double a_bar, const RRConfig& cfg = {});

// Ritz eigenfunction of the merged level n (1-based), as a callable sine
// series; vanishes outside (-a, a) and is L^2-normalized by construction.
std::function<double(double)> rr_eigenfunction(const RROracle& o, int n);

// Distances between the oracle mode n and a closed-form approximation,
// after aligning the oracle's sign with the approximation.
struct WaveComparison {
    double l2_distance = 0.0;  // over (-a, a)
    double sup_distance = 0.0; // on a uniform grid
    double sup_oracle = 0.0;   // max |Phi_n| on the grid
    double sign = 1.0;         // sign applied to the oracle mode
};
WaveComparison rr_compare(const RROracle& o, int n, const WaveApprox& w,
                          int grid_points = 2001);

// Two-term Weyl-law diagnostics of the oracle spectrum. For each level the
// raw phase residual E_n a - n pi/2 retains the rest-energy offset, so the
// fit is done on the mass-corrected residual a sqrt(E_n^2 - 1) - n pi/2,
// modelled as phase + slope/n; phase should approach -pi/8 from below as the
// fit window moves out.
struct WeylRow {
    int n = 0;
    double energy = 0.0;
    double residual = 0.0;       // E a - n pi/2
    double mass_corrected = 0.0; // a sqrt(E^2-1) - n pi/2
};
struct WeylFit {
    std::vector<WeylRow> rows;
    double phase = 0.0;
    double slope = 0.0;
};
WeylFit rr_weyl_fit(const RROracle& o, int n_lo, int n_hi);

} // namespace qrwell
