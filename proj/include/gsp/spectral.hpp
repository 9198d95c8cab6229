#pragma once

#include <Eigen/Dense>

#include "gsp/graph.hpp"

namespace gsp {

/// Eigenvalues with modulus at or below this have no defined argument and
/// cannot be assigned a frequency.
inline constexpr double kZeroModulusEps = 1e-10;

/// Eigenvector-basis conditioning thresholds: warn above the first, treat
/// the decomposition as unusable above the second.
inline constexpr double kVcondWarn = 1e10;
inline constexpr double kVcondFail = 1e14;

/**
 * Eigendecomposition A = V diag(lambdas) Vinv with unit-norm eigenvector
 * columns. residual is the max-norm of A*V - V*diag(lambdas); vcond is a
 * Frobenius-norm condition estimate of V.
 */
struct SpectralDecomposition {
    Matrix V;
    Eigen::VectorXcd lambdas;
    Matrix Vinv;
    double residual = 0.0;
    double vcond = 0.0;
    bool vcond_warning = false;
};

/**
 * The library-wide branch convention. A nonzero eigenvalue is written
 * r*exp(-j*w) with w in [0, 2*pi); its logarithm is ln(r) - j*w. Values
 * within 1e-9 of the 2*pi seam are mapped to 0 so that real-positive
 * eigenvalues (every nonnegative graph has one) land at frequency 0
 * regardless of rounding in the solver.
 *
 * Callers must ensure |z| > 0; use gsp::eigen_frequency for the checked
 * variant.
 */
double frequency_of(Complex z) noexcept;

/// log under the branch rule above: ln|z| - j*frequency_of(z).
Complex branch_log(Complex z) noexcept;

/**
 * Dense nonsymmetric complex eigendecomposition. Fails with
 * NonDiagonalizable when the eigenvector residual exceeds
 * tol*(1 + max|A|) or the eigenvector basis is numerically singular
 * (vcond > 1e14), and with NumericalFailure when the QR iteration does
 * not converge.
 */
SpectralDecomposition spectral_decompose(const Matrix& a, double tol = 1e-9);

/// V diag(branch_log(lambda_i)) Vinv. All eigenvalue moduli must exceed
/// kZeroModulusEps.
Matrix matrix_log_from_decomposition(const SpectralDecomposition& d);

/// Circular forward shift: entry (i, (i-1) mod n) = 1.
Matrix cyclic_shift_matrix(Eigen::Index n);

/// Unitary DFT: entry (k, m) = exp(-j*2*pi*k*m/n)/sqrt(n).
Matrix dft_matrix(Eigen::Index n);

/// Closed-form logarithm of the circular shift under the branch rule:
/// F^H diag(-j*2*pi*k/n) F with F the unitary DFT.
Matrix log_cyclic_shift(Eigen::Index n);

/// Scaling-and-squaring matrix exponential (Pade approximants). Shares no
/// code with the eigendecomposition path, so exp/log identities checked
/// against it are two-route tests.
Matrix matrix_exp(const Matrix& a);

}  // namespace gsp
