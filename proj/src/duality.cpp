#include "gsp/duality.hpp"

#include <cmath>
#include <string>

namespace gsp {

namespace {

Matrix scaled_log_shift(const Eigen::VectorXd& deltas, Complex scale) {
    const Eigen::Index n = deltas.size();
    Matrix l = log_cyclic_shift(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        l.row(r) *= scale / deltas[r];
    }
    return l;
}

}  // namespace

SamplingGrid make_sampling_grid(const Eigen::VectorXd& points, double period) {
    const Eigen::Index n = points.size();
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "a sampling grid needs at least 2 points");
    }
    if (!std::isfinite(period) || !(period > 0.0)) {
        throw Error(ErrorCode::NonFiniteWeight, "period must be finite and positive");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(points[i])) {
            throw Error(ErrorCode::NonFiniteWeight, "sample points must be finite",
                        {static_cast<long>(i)});
        }
    }
    if (points[0] < 0.0) {
        throw Error(ErrorCode::ParseError, "sample points must start at t >= 0",
                    {0});
    }
    for (Eigen::Index i = 1; i < n; ++i) {
        if (!(points[i] > points[i - 1])) {
            throw Error(ErrorCode::ParseError,
                        "sample points must be strictly increasing",
                        {static_cast<long>(i)});
        }
    }
    if (!(points[n - 1] < period)) {
        throw Error(ErrorCode::ParseError,
                    "sample points must stay below the period",
                    {static_cast<long>(n - 1)});
    }

    SamplingGrid g;
    g.points = points;
    g.period = period;
    g.delta.resize(n);
    g.delta[0] = points[0] - (points[n - 1] - period);
    for (Eigen::Index i = 1; i < n; ++i) {
        g.delta[i] = points[i] - points[i - 1];
    }
    return g;
}

SamplingGrid uniform_sampling_grid(Eigen::Index n, double period) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "a sampling grid needs at least 2 points");
    }
    Eigen::VectorXd pts(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        pts[i] = period * static_cast<double>(i) / static_cast<double>(n);
    }
    return make_sampling_grid(pts, period);
}

Matrix differential_operator(const SamplingGrid& grid) {
    return scaled_log_shift(grid.delta, Complex(-1.0, 0.0));
}

Matrix fourier_derivative(const FrequencyGrid& grid) {
    return scaled_log_shift(grid.delta_omega, Complex(-1.0, 0.0));
}

Matrix dual_derivative(const FrequencyGrid& grid) {
    return scaled_log_shift(grid.delta_omega, Complex(0.0, 1.0));
}

VmComputation compute_vm(const Graph& g, const VmOptions& opts,
                         std::string_view label) {
    check_graph_invariants(g);
    Matrix a = g.adjacency;
    if (opts.policy == ZeroFreqPolicy::Perturb) {
        if (!(opts.perturb_eps > 0.0) || !std::isfinite(opts.perturb_eps)) {
            throw Error(ErrorCode::InvalidSize,
                        "perturbation size must be finite and positive");
        }
        a += opts.perturb_eps * cyclic_shift_matrix(g.n);
    }

    const SpectralDecomposition d = spectral_decompose(a, opts.tol);
    // Under Perturb any remaining zero-modulus eigenvalue means the
    // perturbation failed to lift it, so fall through to the error path.
    const ZeroFreqPolicy order_policy = opts.policy == ZeroFreqPolicy::Perturb
                                            ? ZeroFreqPolicy::Error
                                            : opts.policy;

    VmComputation out;
    out.policy = opts.policy;
    out.spectrum = order_and_normalize(d, opts.eps_freq, order_policy);
    out.dual_operator = dual_derivative(out.spectrum.grid);
    out.vm.matrix =
        out.spectrum.decomp.Vinv * out.dual_operator * out.spectrum.decomp.V;
    out.vm.source = std::string(label) + ";n=" + std::to_string(g.n) +
                    ";policy=" + to_string(opts.policy) + ";branch=[0,2pi)";
    if (opts.policy == ZeroFreqPolicy::Perturb) {
        out.vm.source += ";perturb_eps=" + std::to_string(opts.perturb_eps);
    }
    return out;
}

VertexMultiplication vertex_multiplication(const Graph& g, const VmOptions& opts,
                                           std::string_view label) {
    return compute_vm(g, opts, label).vm;
}

Signal vm_apply_product(const VertexMultiplication& vm, const Signal& x) {
    if (x.size() != vm.matrix.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "signal length " + std::to_string(x.size()) +
                        " does not match operator size " +
                        std::to_string(vm.matrix.rows()));
    }
    return vm.matrix * x;
}

Signal vm_apply_accumulate(const VertexMultiplication& vm, const Signal& x) {
    if (x.size() != vm.matrix.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "signal length " + std::to_string(x.size()) +
                        " does not match operator size " +
                        std::to_string(vm.matrix.rows()));
    }
    Signal y = Signal::Zero(vm.matrix.rows());
    for (Eigen::Index c = 0; c < vm.matrix.cols(); ++c) {
        y += x[c] * vm.matrix.col(c);
    }
    return y;
}

Signal vm_apply(const VertexMultiplication& vm, const Signal& x) {
    Signal y = vm_apply_product(vm, x);
    Signal z = vm_apply_accumulate(vm, x);
    const double diff = (y - z).cwiseAbs().maxCoeff();
    const double scale = 1.0 + y.cwiseAbs().maxCoeff();
    if (!(diff <= 1e-12 * scale)) {
        throw Error(ErrorCode::NumericalFailure,
                    "matrix-product and accumulation paths disagree by " +
                        std::to_string(diff));
    }
    return y;
}

CoordNorm coord_norm_from_string(std::string_view name) {
    if (name == "l1") return CoordNorm::L1;
    if (name == "l2") return CoordNorm::L2;
    if (name == "linf") return CoordNorm::LInf;
    throw Error(ErrorCode::UnknownKind,
                "unknown coordinate norm '" + std::string(name) + "'");
}

Eigen::VectorXd coordinates(const VertexMultiplication& vm, CoordNorm norm) {
    switch (norm) {
        case CoordNorm::L1:
            return vm.matrix.cwiseAbs().colwise().sum().transpose();
        case CoordNorm::L2:
            return vm.matrix.colwise().norm().transpose();
        case CoordNorm::LInf:
            return vm.matrix.cwiseAbs().colwise().maxCoeff().transpose();
    }
    throw Error(ErrorCode::InternalError, "unreachable coordinate norm");
}

Eigen::VectorXd l1_coordinates(const VertexMultiplication& vm) {
    return coordinates(vm, CoordNorm::L1);
}

Eigen::VectorXd normalized_coordinates(const Eigen::VectorXd& coords) {
    const Eigen::Index n = coords.size();
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "need at least 2 coordinates to normalize");
    }
    const double lo = coords.minCoeff();
    const double hi = coords.maxCoeff();
    // Constant coordinates land within rounding of each other, not exactly
    // equal; rescaling such a range would amplify that noise to [0, N-1].
    if (!(hi - lo > 1e-12 * (1.0 + std::abs(hi)))) {
        throw Error(ErrorCode::DegenerateRange,
                    "coordinates span a zero range; nothing to rescale");
    }
    return (coords.array() - lo) * (static_cast<double>(n - 1) / (hi - lo));
}

}  // namespace gsp
