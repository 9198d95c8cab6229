#pragma once

#include <Eigen/Dense>

#include "gsp/spectral.hpp"

namespace gsp {

/**
 * Strictly increasing frequencies in [0, 2*pi) with circular spacings.
 * delta_omega[0] wraps: omega_0 - (omega_{N-1} - 2*pi). The spacings sum
 * to 2*pi.
 */
struct FrequencyGrid {
    Eigen::VectorXd omegas;
    std::vector<Eigen::Index> permutation;  // ordered index -> raw index
    Eigen::VectorXd delta_omega;
};

/**
 * A spectral decomposition permuted into increasing-frequency order with
 * deterministically fixed eigenvector phases: each column has unit norm
 * and its largest-modulus entry (lowest index on ties within 1e-12) made
 * real and positive. Under these conventions the cycle graph's Vinv is
 * exactly the unitary DFT.
 */
struct OrderedSpectrum {
    SpectralDecomposition decomp;
    FrequencyGrid grid;
    Eigen::VectorXd magnitudes;  // r_i = |lambda_i|, frequency order
};

/// What to do when an eigenvalue has no defined frequency (|lambda| ~ 0).
/// Error rejects; Midpoint assigns the midpoint of the largest circular
/// frequency gap (a labeled extrapolation); Perturb is handled upstream by
/// recomputing on A + eps*S0 and behaves like Error here.
enum class ZeroFreqPolicy { Error, Midpoint, Perturb };

const char* to_string(ZeroFreqPolicy policy);
ZeroFreqPolicy zero_freq_policy_from_string(std::string_view name);

/// Frequency of a nonzero eigenvalue: the unique w in [0, 2*pi) with
/// lambda = |lambda|*exp(-j*w). Throws ZeroModulusEigenvalue.
double eigen_frequency(Complex lambda);

OrderedSpectrum order_and_normalize(const SpectralDecomposition& d,
                                    double eps_freq = 1e-8,
                                    ZeroFreqPolicy policy = ZeroFreqPolicy::Error);

/// Forward transform: xt = Vinv * x.
Signal gft(const OrderedSpectrum& s, const Signal& x);

/// Inverse transform: x = V * xt.
Signal igft(const OrderedSpectrum& s, const Signal& xt);

}  // namespace gsp
