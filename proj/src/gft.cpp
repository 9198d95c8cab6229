#include "gsp/gft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace gsp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieEps = 1e-12;

// Midpoint of the largest circular gap between the known frequencies;
// the earliest gap (in increasing-frequency order) wins ties closer than
// 1e-12. Used to place a frequency for a zero-modulus eigenvalue under
// ZeroFreqPolicy::Midpoint.
double midpoint_frequency(std::vector<double> known) {
    std::sort(known.begin(), known.end());
    const std::size_t m = known.size();
    double best_gap = -1.0;
    double best_mid = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double lo = known[i];
        const double hi = (i + 1 == m) ? known[0] + kTwoPi : known[i + 1];
        const double gap = hi - lo;
        if (gap > best_gap + 1e-12) {
            best_gap = gap;
            best_mid = 0.5 * (lo + hi);
        }
    }
    double mid = std::fmod(best_mid, kTwoPi);
    if (mid < 0.0) mid += kTwoPi;
    return mid;
}

// Unit norm, then rotate so the largest-modulus entry (lowest index on
// ties within 1e-12) is real and positive. Idempotent: a column already
// in this form is returned bit-identical.
void fix_column_phase(Eigen::Ref<Eigen::VectorXcd> col) {
    const double norm = col.norm();
    if (std::abs(norm - 1.0) > 1e-14) col /= norm;

    Eigen::Index pivot = 0;
    double top = 0.0;
    for (Eigen::Index i = 0; i < col.size(); ++i) {
        top = std::max(top, std::abs(col[i]));
    }
    for (Eigen::Index i = 0; i < col.size(); ++i) {
        if (std::abs(col[i]) >= top - kTieEps) {
            pivot = i;
            break;
        }
    }
    const Complex p = col[pivot];
    if (p.imag() == 0.0 && p.real() > 0.0) return;
    const double mod = std::abs(p);
    col *= std::conj(p) / mod;
    col[pivot] = Complex(mod, 0.0);
}

}  // namespace

const char* to_string(ZeroFreqPolicy policy) {
    switch (policy) {
        case ZeroFreqPolicy::Error: return "error";
        case ZeroFreqPolicy::Midpoint: return "midpoint";
        case ZeroFreqPolicy::Perturb: return "perturb";
    }
    return "?";
}

ZeroFreqPolicy zero_freq_policy_from_string(std::string_view name) {
    if (name == "error") return ZeroFreqPolicy::Error;
    if (name == "midpoint") return ZeroFreqPolicy::Midpoint;
    if (name == "perturb") return ZeroFreqPolicy::Perturb;
    throw Error(ErrorCode::UnknownKind,
                "unknown zero-frequency policy '" + std::string(name) + "'");
}

double eigen_frequency(Complex lambda) {
    if (std::abs(lambda) <= kZeroModulusEps) {
        throw Error(ErrorCode::ZeroModulusEigenvalue,
                    "eigenvalue modulus too small to carry a frequency");
    }
    return frequency_of(lambda);
}

OrderedSpectrum order_and_normalize(const SpectralDecomposition& d,
                                    double eps_freq, ZeroFreqPolicy policy) {
    if (!(eps_freq > 0.0)) {
        throw Error(ErrorCode::InvalidSize, "eps_freq must be positive");
    }
    const Eigen::Index n = d.lambdas.size();

    std::vector<long> zero_idx;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(d.lambdas[i]) <= kZeroModulusEps) {
            zero_idx.push_back(static_cast<long>(i));
        }
    }

    Eigen::VectorXd omegas_raw(n);
    if (zero_idx.empty()) {
        for (Eigen::Index i = 0; i < n; ++i) {
            omegas_raw[i] = frequency_of(d.lambdas[i]);
        }
    } else {
        // Perturb is resolved upstream by re-decomposing a perturbed
        // adjacency; if a zero survives to this point it is an error.
        if (policy != ZeroFreqPolicy::Midpoint) {
            throw Error(ErrorCode::ZeroModulusEigenvalue,
                        "eigenvalues with zero modulus have no frequency",
                        std::move(zero_idx));
        }
        if (zero_idx.size() != 1) {
            throw Error(ErrorCode::ZeroModulusEigenvalue,
                        "midpoint policy supports exactly one zero-modulus "
                        "eigenvalue",
                        std::move(zero_idx));
        }
        std::vector<double> known;
        known.reserve(static_cast<std::size_t>(n) - 1);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != zero_idx.front()) known.push_back(frequency_of(d.lambdas[i]));
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            omegas_raw[i] = (i == zero_idx.front())
                                ? midpoint_frequency(known)
                                : frequency_of(d.lambdas[i]);
        }
    }

    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    std::stable_sort(perm.begin(), perm.end(), [&](Eigen::Index a, Eigen::Index b) {
        return omegas_raw[a] < omegas_raw[b];
    });

    OrderedSpectrum s;
    s.grid.omegas.resize(n);
    s.grid.permutation = perm;
    s.magnitudes.resize(n);
    s.decomp.lambdas.resize(n);
    s.decomp.V.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s.grid.omegas[i] = omegas_raw[perm[static_cast<std::size_t>(i)]];
        s.decomp.lambdas[i] = d.lambdas[perm[static_cast<std::size_t>(i)]];
        s.magnitudes[i] = std::abs(s.decomp.lambdas[i]);
        s.decomp.V.col(i) = d.V.col(perm[static_cast<std::size_t>(i)]);
        fix_column_phase(s.decomp.V.col(i));
    }

    s.grid.delta_omega.resize(n);
    s.grid.delta_omega[0] = s.grid.omegas[0] - (s.grid.omegas[n - 1] - kTwoPi);
    for (Eigen::Index k = 1; k < n; ++k) {
        s.grid.delta_omega[k] = s.grid.omegas[k] - s.grid.omegas[k - 1];
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!(s.grid.delta_omega[k] >= eps_freq)) {
            const Eigen::Index prev = (k + n - 1) % n;
            throw Error(ErrorCode::DegenerateFrequencies,
                        "frequencies separated by less than eps_freq; the "
                        "construction assumes distinct frequencies",
                        {static_cast<long>(perm[static_cast<std::size_t>(prev)]),
                         static_cast<long>(perm[static_cast<std::size_t>(k)])});
        }
    }

    s.decomp.Vinv = s.decomp.V.partialPivLu().inverse();
    if (!s.decomp.Vinv.allFinite()) {
        throw Error(ErrorCode::IllConditioned,
                    "normalized eigenvector basis is numerically singular");
    }
    s.decomp.vcond = s.decomp.V.norm() * s.decomp.Vinv.norm();
    if (!(s.decomp.vcond <= kVcondFail)) {
        throw Error(ErrorCode::IllConditioned,
                    "eigenvector condition " + std::to_string(s.decomp.vcond) +
                        " exceeds " + std::to_string(kVcondFail));
    }
    s.decomp.vcond_warning = s.decomp.vcond > kVcondWarn;
    s.decomp.residual = d.residual;
    return s;
}

Signal gft(const OrderedSpectrum& s, const Signal& x) {
    if (x.size() != s.decomp.V.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "signal length " + std::to_string(x.size()) +
                        " does not match spectrum size " +
                        std::to_string(s.decomp.V.rows()));
    }
    return s.decomp.Vinv * x;
}

Signal igft(const OrderedSpectrum& s, const Signal& xt) {
    if (xt.size() != s.decomp.V.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "signal length " + std::to_string(xt.size()) +
                        " does not match spectrum size " +
                        std::to_string(s.decomp.V.rows()));
    }
    return s.decomp.V * xt;
}

}  // namespace gsp
