#include "gsp/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace gsp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Frequencies this close to 2*pi are solver noise on a real-positive
// eigenvalue and belong at 0.
constexpr double kSeamSnap = 1e-9;

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

double frequency_of(Complex z) noexcept {
    double w = -std::arg(z);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi - kSeamSnap) w = 0.0;
    return w + 0.0;  // never -0.0
}

Complex branch_log(Complex z) noexcept {
    return {std::log(std::abs(z)), -frequency_of(z)};
}

SpectralDecomposition spectral_decompose(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "spectral decomposition needs a square matrix");
    }
    if (a.rows() < 1) {
        throw Error(ErrorCode::InvalidSize, "empty matrix");
    }
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidSize, "tolerance must be positive");
    }

    Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure,
                    "eigenvalue iteration did not converge");
    }

    SpectralDecomposition d;
    d.V = solver.eigenvectors();
    d.lambdas = solver.eigenvalues();

    for (Eigen::Index j = 0; j < d.V.cols(); ++j) {
        double norm = d.V.col(j).norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw Error(ErrorCode::NonDiagonalizable,
                        "degenerate eigenvector column",
                        {static_cast<long>(j)});
        }
        if (std::abs(norm - 1.0) > 1e-14) d.V.col(j) /= norm;
    }

    d.Vinv = d.V.partialPivLu().inverse();
    if (!d.Vinv.allFinite()) {
        throw Error(ErrorCode::NonDiagonalizable,
                    "eigenvector basis is numerically singular");
    }
    d.vcond = d.V.norm() * d.Vinv.norm();
    d.residual = max_abs(a * d.V - d.V * d.lambdas.asDiagonal());

    if (!(d.vcond <= kVcondFail)) {
        throw Error(ErrorCode::NonDiagonalizable,
                    "eigenvector condition " + std::to_string(d.vcond) +
                        " exceeds " + std::to_string(kVcondFail));
    }
    d.vcond_warning = d.vcond > kVcondWarn;
    if (d.residual > tol * (1.0 + max_abs(a))) {
        throw Error(ErrorCode::NonDiagonalizable,
                    "eigenpair residual " + std::to_string(d.residual) +
                        " exceeds the requested tolerance");
    }
    return d;
}

Matrix matrix_log_from_decomposition(const SpectralDecomposition& d) {
    const Eigen::Index n = d.lambdas.size();
    std::vector<long> zeros;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(d.lambdas[i]) <= kZeroModulusEps) {
            zeros.push_back(static_cast<long>(i));
        }
    }
    if (!zeros.empty()) {
        throw Error(ErrorCode::ZeroModulusEigenvalue,
                    "logarithm undefined for zero-modulus eigenvalues",
                    std::move(zeros));
    }
    Eigen::VectorXcd logs(n);
    for (Eigen::Index i = 0; i < n; ++i) logs[i] = branch_log(d.lambdas[i]);
    return d.V * logs.asDiagonal() * d.Vinv;
}

Matrix cyclic_shift_matrix(Eigen::Index n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "cyclic shift needs n >= 2, got " + std::to_string(n));
    }
    Matrix s = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) s(i, (i - 1 + n) % n) = 1.0;
    return s;
}

Matrix dft_matrix(Eigen::Index n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidSize,
                    "DFT needs n >= 1, got " + std::to_string(n));
    }
    Matrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index m = 0; m < n; ++m) {
            // reduce k*m mod n first so the angle stays small and exact
            Eigen::Index r = (k * m) % n;
            f(k, m) = std::polar(scale, -kTwoPi * static_cast<double>(r) /
                                            static_cast<double>(n));
        }
    }
    return f;
}

Matrix log_cyclic_shift(Eigen::Index n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "log of the cyclic shift needs n >= 2, got " + std::to_string(n));
    }
    Matrix f = dft_matrix(n);
    Eigen::VectorXcd logs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        logs[k] = Complex(0.0, -kTwoPi * static_cast<double>(k) /
                                   static_cast<double>(n));
    }
    return f.adjoint() * logs.asDiagonal() * f;
}

namespace {

// Pade approximant exp(A) ~ (V - U)^{-1} (V + U) of order m, following the
// usual scaling-and-squaring coefficients.
void exp_pade(const Matrix& a, int order, Matrix& u, Matrix& v) {
    const Eigen::Index n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    switch (order) {
        case 3: {
            u = a * (a2 + 60.0 * id);
            v = 12.0 * a2 + 120.0 * id;
            return;
        }
        case 5: {
            const Matrix a4 = a2 * a2;
            u = a * (a4 + 420.0 * a2 + 15120.0 * id);
            v = 30.0 * a4 + 3360.0 * a2 + 30240.0 * id;
            return;
        }
        case 7: {
            const Matrix a4 = a2 * a2;
            const Matrix a6 = a4 * a2;
            u = a * (a6 + 1512.0 * a4 + 277200.0 * a2 + 8648640.0 * id);
            v = 56.0 * a6 + 25200.0 * a4 + 1995840.0 * a2 + 17297280.0 * id;
            return;
        }
        case 9: {
            const Matrix a4 = a2 * a2;
            const Matrix a6 = a4 * a2;
            const Matrix a8 = a6 * a2;
            u = a * (a8 + 3960.0 * a6 + 2162160.0 * a4 + 302702400.0 * a2 +
                     8821612800.0 * id);
            v = 90.0 * a8 + 110880.0 * a6 + 30270240.0 * a4 +
                2075673600.0 * a2 + 17643225600.0 * id;
            return;
        }
        default: {  // 13
            const double b[] = {64764752532480000.0, 32382376266240000.0,
                                7771770303897600.0,  1187353796428800.0,
                                129060195264000.0,   10559470521600.0,
                                670442572800.0,      33522128640.0,
                                1323241920.0,        40840800.0,
                                960960.0,            16380.0,
                                182.0,               1.0};
            const Matrix a4 = a2 * a2;
            const Matrix a6 = a4 * a2;
            u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                     b[5] * a4 + b[3] * a2 + b[1] * id);
            v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                b[4] * a4 + b[2] * a2 + b[0] * id;
            return;
        }
    }
}

}  // namespace

Matrix matrix_exp(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix exponential needs a square matrix");
    }
    if (!a.allFinite()) {
        throw Error(ErrorCode::NumericalFailure,
                    "matrix exponential of non-finite input");
    }
    const Eigen::Index n = a.rows();
    if (n == 0) return a;

    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    Matrix u, v;
    int squarings = 0;
    if (norm1 <= 1.495585217958292e-2) {
        exp_pade(a, 3, u, v);
    } else if (norm1 <= 2.539398330063230e-1) {
        exp_pade(a, 5, u, v);
    } else if (norm1 <= 9.504178996162932e-1) {
        exp_pade(a, 7, u, v);
    } else if (norm1 <= 2.097847961257068) {
        exp_pade(a, 9, u, v);
    } else {
        const double theta13 = 5.371920351148152;
        squarings = std::max(0, static_cast<int>(
                                    std::ceil(std::log2(norm1 / theta13))));
        Matrix scaled = a / std::pow(2.0, squarings);
        exp_pade(scaled, 13, u, v);
    }

    Matrix result = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) result = result * result;
    if (!result.allFinite()) {
        throw Error(ErrorCode::NumericalFailure,
                    "matrix exponential overflowed");
    }
    return result;
}

}  // namespace gsp
