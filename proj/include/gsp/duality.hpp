#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "gsp/gft.hpp"
#include "gsp/graph.hpp"

namespace gsp {

/**
 * Irregular sampling points t_0 < ... < t_{N-1} of one period [0, T).
 * delta holds the spacings with wraparound t_{-1} = t_{N-1} - T; they are
 * positive and sum to T.
 */
struct SamplingGrid {
    Eigen::VectorXd points;
    double period = 0.0;
    Eigen::VectorXd delta;
};

SamplingGrid make_sampling_grid(const Eigen::VectorXd& points, double period);

/// Uniform grid with t_n = n*T/N.
SamplingGrid uniform_sampling_grid(Eigen::Index n, double period);

/**
 * The vertex multiplication operator U_G. Column i is the coordinate
 * vector of vertex i; the source string records the graph identity and
 * the conventions it was computed under.
 */
struct VertexMultiplication {
    Matrix matrix;
    std::string source;
};

struct VmOptions {
    double eps_freq = 1e-8;
    double tol = 1e-9;
    ZeroFreqPolicy policy = ZeroFreqPolicy::Error;
    double perturb_eps = 1e-6;
};

/// Full pipeline output: the ordered spectrum of the adjacency, the
/// frequency-domain dual derivative it induces, and U_G itself.
struct VmComputation {
    OrderedSpectrum spectrum;
    Matrix dual_operator;
    VertexMultiplication vm;
    ZeroFreqPolicy policy = ZeroFreqPolicy::Error;
};

/// Sample-domain derivative for an irregular grid:
/// -diag(delta)^{-1} log(S0). Satisfies exp(-diag(delta) * result) = S0.
Matrix differential_operator(const SamplingGrid& grid);

/// Frequency-domain derivative: -diag(delta_omega)^{-1} log(S0).
Matrix fourier_derivative(const FrequencyGrid& freqs);

/// Rescaled dual derivative j*diag(delta_omega)^{-1} log(S0), the operator
/// whose Fourier conjugate is U_G. Equals -j * fourier_derivative.
Matrix dual_derivative(const FrequencyGrid& freqs);

VmComputation compute_vm(const Graph& g, const VmOptions& opts = {},
                         std::string_view label = "graph");

VertexMultiplication vertex_multiplication(const Graph& g,
                                           const VmOptions& opts = {},
                                           std::string_view label = "graph");

/// y = U_G * x, computed both as a matrix product and as the coordinate-
/// vector superposition sum_i x_i u_i; the two routes are cross-checked.
Signal vm_apply(const VertexMultiplication& vm, const Signal& x);

Signal vm_apply_product(const VertexMultiplication& vm, const Signal& x);
Signal vm_apply_accumulate(const VertexMultiplication& vm, const Signal& x);

enum class CoordNorm { L1, L2, LInf };

/// Scalar coordinate of each vertex: the L1 norm of its coordinate vector.
Eigen::VectorXd l1_coordinates(const VertexMultiplication& vm);

/// Column norms under other norms; anything but L1 is an extension beyond
/// the reference construction.
Eigen::VectorXd coordinates(const VertexMultiplication& vm, CoordNorm norm);

CoordNorm coord_norm_from_string(std::string_view name);

/// Affine rescale of coordinates onto [0, N-1]. DegenerateRange when the
/// coordinates are constant up to a relative 1e-12.
Eigen::VectorXd normalized_coordinates(const Eigen::VectorXd& coords);

}  // namespace gsp
