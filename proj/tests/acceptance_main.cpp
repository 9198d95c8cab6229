// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only when all
// nine pass. Run with --cli PATH --golden DIR.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsp/duality.hpp"
#include "gsp/gft.hpp"
#include "gsp/graph.hpp"
#include "gsp/spectral.hpp"

namespace {

namespace fs = std::filesystem;
using gsp::Complex;
using gsp::Matrix;
using gsp::Signal;

constexpr double kPi = 3.14159265358979323846;

std::string g_cli;
std::string g_golden;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.derived().cwiseAbs().maxCoeff();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json load_golden(const std::string& name) {
    const fs::path p = fs::path(g_golden) / name;
    const std::string text = slurp(p);
    if (text.empty()) {
        throw std::runtime_error("missing golden file " + p.string());
    }
    return nlohmann::json::parse(text);
}

double json_max_diff(const nlohmann::json& a, const nlohmann::json& b) {
    if (a.is_array()) {
        if (!b.is_array() || a.size() != b.size()) {
            throw std::runtime_error("golden shape mismatch");
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, json_max_diff(a[i], b[i]));
        }
        return worst;
    }
    return std::abs(a.get<double>() - b.get<double>());
}

// Max deviation of a full computation from a pinned regression bundle.
double diff_vs_golden(const gsp::VmComputation& c, const nlohmann::json& want) {
    const Matrix& u = c.vm.matrix;
    double worst = 0.0;
    const auto& re = want.at("U").at("re");
    const auto& im = want.at("U").at("im");
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (Eigen::Index col = 0; col < u.cols(); ++col) {
            worst = std::max(worst, std::abs(u(r, col).real() -
                                             re[r][col].get<double>()));
            worst = std::max(worst, std::abs(u(r, col).imag() -
                                             im[r][col].get<double>()));
        }
    }
    const Eigen::VectorXd l1 = gsp::l1_coordinates(c.vm);
    const Eigen::VectorXd norm = gsp::normalized_coordinates(l1);
    const auto& gl1 = want.at("coords_l1");
    const auto& gn = want.at("coords_norm");
    const auto& go = want.at("omegas");
    for (Eigen::Index i = 0; i < l1.size(); ++i) {
        worst = std::max(worst, std::abs(l1[i] - gl1[i].get<double>()));
        worst = std::max(worst, std::abs(norm[i] - gn[i].get<double>()));
        worst = std::max(
            worst, std::abs(c.spectrum.grid.omegas[i] - go[i].get<double>()));
    }
    return worst;
}

bool criterion_cycle_ramp(std::string& detail) {
    double worst = 0.0;
    for (Eigen::Index n = 2; n <= 64; ++n) {
        const auto c = gsp::compute_vm(gsp::cycle_graph(n), {}, "cycle");
        Matrix want = Matrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) want(i, i) = Complex(double(i), 0);
        worst = std::max(worst, max_abs(c.vm.matrix - want));
    }
    detail = "max |U - diag(0..n-1)| = " + fmt(worst) + " over n in [2,64]";
    return worst <= 1e-8;
}

bool criterion_dft_reduction(std::string& detail) {
    double worst = 0.0;
    for (Eigen::Index n = 2; n <= 64; ++n) {
        const auto d = gsp::spectral_decompose(gsp::cycle_graph(n).adjacency);
        const auto s = gsp::order_and_normalize(d);
        worst = std::max(worst, max_abs(s.decomp.Vinv - gsp::dft_matrix(n)));
    }
    detail = "max |Vinv - DFT| = " + fmt(worst) + " over n in [2,64]";
    return worst <= 1e-10;
}

// Similarity check for one already-computed pipeline: conjugating U_G by
// V must recover the frequency-domain dual derivative.
double similarity_excess(const gsp::VmComputation& c) {
    const Matrix lhs =
        c.spectrum.decomp.V * c.vm.matrix * c.spectrum.decomp.Vinv;
    const double tol = 1e-9 * (1.0 + c.spectrum.decomp.vcond);
    return max_abs(lhs - c.dual_operator) / tol;
}

bool criterion_duality_similarity(std::string& detail) {
    double worst = 0.0;
    worst = std::max(worst, similarity_excess(gsp::compute_vm(
                                gsp::demo_graph(gsp::DemoKind::G1, 8), {}, "g1")));
    worst = std::max(worst, similarity_excess(gsp::compute_vm(
                                gsp::demo_graph(gsp::DemoKind::G2, 8), {}, "g2")));

    std::mt19937_64 rng(20240717);
    std::uniform_real_distribution<double> cyc(0.5, 1.5);
    std::uniform_real_distribution<double> extra(0.1, 0.5);
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<Eigen::Index> vertex(0, 5);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 20 && attempts < 500) {
        ++attempts;
        // strong connectivity via a Hamiltonian cycle plus a few chords
        std::vector<gsp::Edge> edges;
        for (Eigen::Index i = 0; i < 6; ++i) {
            edges.push_back({i, (i + 1) % 6, cyc(rng)});
        }
        const int n_extra = count(rng);
        for (int e = 0; e < n_extra; ++e) {
            const Eigen::Index s = vertex(rng);
            const Eigen::Index d = vertex(rng);
            if (s == d || d == (s + 1) % 6) continue;
            bool dup = false;
            for (const auto& known : edges) {
                dup = dup || (known.src == s && known.dst == d);
            }
            if (!dup) edges.push_back({s, d, extra(rng)});
        }
        try {
            const gsp::Graph g = gsp::graph_from_edge_list(6, edges);
            worst = std::max(worst,
                             similarity_excess(gsp::compute_vm(g, {}, "rand")));
            ++accepted;
        } catch (const gsp::Error&) {
            // failed the distinct-frequency gate; draw another graph
        }
    }
    detail = "worst |V U V^-1 - dual| / tol = " + fmt(worst) + " over G1, G2, " +
             std::to_string(accepted) + " random digraphs";
    return accepted == 20 && worst <= 1.0;
}

bool criterion_shift_generator(std::string& detail) {
    std::mt19937_64 rng(912837);
    std::uniform_int_distribution<Eigen::Index> size(2, 32);
    std::uniform_real_distribution<double> period(1.0, 10.0);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = size(rng);
        const double t_total = period(rng);
        Eigen::VectorXd points(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            points[k] = (double(k) + 0.5 * jitter(rng)) * t_total / double(n);
        }
        const gsp::SamplingGrid grid = gsp::make_sampling_grid(points, t_total);
        const Matrix nabla = gsp::differential_operator(grid);
        const Matrix gen =
            Matrix((-grid.delta).cast<Complex>().asDiagonal()) * nabla;
        worst = std::max(
            worst, max_abs(gsp::matrix_exp(gen) - gsp::cyclic_shift_matrix(n)));
    }
    detail = "max |exp(-diag(dt) grad) - S0| = " + fmt(worst) +
             " over 20 random grids";
    return worst <= 1e-9;
}

bool criterion_spectral_differentiation(std::string& detail) {
    const gsp::SamplingGrid grid = gsp::uniform_sampling_grid(16, 2.0 * kPi);
    const Matrix nabla = gsp::differential_operator(grid);
    double worst = 0.0;
    for (int m = 0; m < 16; ++m) {
        Signal x(16);
        for (Eigen::Index k = 0; k < 16; ++k) {
            x[k] = std::exp(Complex(0.0, m * grid.points[k]));
        }
        const Signal want = Complex(0.0, double(m)) * x;
        worst = std::max(worst, max_abs(Signal(nabla * x - want)));
    }
    detail = "max |grad x - j m x| = " + fmt(worst) + " over m in [0,15]";
    return worst <= 1e-8;
}

bool criterion_complexity(std::string& detail) {
    const auto g1 = gsp::compute_vm(gsp::demo_graph(gsp::DemoKind::G1, 8), {}, "g1");
    const auto g2 = gsp::compute_vm(gsp::demo_graph(gsp::DemoKind::G2, 8), {}, "g2");
    const double im1 = g1.vm.matrix.imag().cwiseAbs().maxCoeff();
    const double im2 = g2.vm.matrix.imag().cwiseAbs().maxCoeff();
    detail = "max |Im U|: G1 = " + fmt(im1) + ", G2 = " + fmt(im2);
    return im1 <= 1e-9 && im2 >= 0.01;
}

bool criterion_coordinates(std::string& detail) {
    const auto c = gsp::compute_vm(gsp::demo_graph(gsp::DemoKind::G2, 8), {}, "g2");
    const Eigen::VectorXd norm =
        gsp::normalized_coordinates(gsp::l1_coordinates(c.vm));
    const bool merge = std::abs(norm[0] - norm[1]) < std::abs(norm[2] - norm[1]);
    const double drift = diff_vs_golden(c, load_golden("g2_n8_error.json"));
    detail = "|c0-c1| = " + fmt(std::abs(norm[0] - norm[1])) + " < |c2-c1| = " +
             fmt(std::abs(norm[2] - norm[1])) + ", golden drift " + fmt(drift);
    return merge && drift <= 1e-8;
}

bool criterion_zero_eigenvalue(std::string& detail) {
    const gsp::Graph g3 = gsp::demo_graph(gsp::DemoKind::G3, 8);
    bool default_rejects = false;
    try {
        gsp::compute_vm(g3, {}, "g3");
    } catch (const gsp::Error& e) {
        default_rejects = e.code() == gsp::ErrorCode::ZeroModulusEigenvalue;
    }

    gsp::VmOptions mid;
    mid.policy = gsp::ZeroFreqPolicy::Midpoint;
    const double d_mid =
        diff_vs_golden(gsp::compute_vm(g3, mid, "g3"),
                       load_golden("g3_n8_midpoint.json"));

    gsp::VmOptions pert;
    pert.policy = gsp::ZeroFreqPolicy::Perturb;
    const double d_pert =
        diff_vs_golden(gsp::compute_vm(g3, pert, "g3"),
                       load_golden("g3_n8_perturb.json"));

    detail = std::string("default policy ") +
             (default_rejects ? "rejects" : "DID NOT reject") +
             ", midpoint drift " + fmt(d_mid) + ", perturb drift " + fmt(d_pert);
    return default_rejects && d_mid <= 1e-8 && d_pert <= 1e-8;
}

int run_quiet(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_properties(std::string& detail) {
    std::mt19937_64 rng(5150);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // gft/igft round trip on both demo spectra
    double rt = 0.0;
    for (const gsp::DemoKind kind : {gsp::DemoKind::G1, gsp::DemoKind::G2}) {
        const auto d =
            gsp::spectral_decompose(gsp::demo_graph(kind, 8).adjacency);
        const auto s = gsp::order_and_normalize(d);
        for (int trial = 0; trial < 5; ++trial) {
            Signal x(8);
            for (Eigen::Index i = 0; i < 8; ++i) {
                x[i] = Complex(gauss(rng), gauss(rng));
            }
            rt = std::max(rt, max_abs(Signal(gsp::igft(s, gsp::gft(s, x)) - x)));
        }
    }

    // exp(log S0) recovers the shift; log S0 is circulant and kills ones
    double exp_log = 0.0;
    double circ = 0.0;
    double ones_res = 0.0;
    double trace_gap = 0.0;
    for (Eigen::Index n = 2; n <= 64; ++n) {
        const Matrix l = gsp::log_cyclic_shift(n);
        exp_log = std::max(
            exp_log, max_abs(gsp::matrix_exp(l) - gsp::cyclic_shift_matrix(n)));
        ones_res = std::max(ones_res, max_abs(Signal(l * Signal::Ones(n))));
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index col = 0; col < n; ++col) {
                circ = std::max(circ, std::abs(l(r, col) -
                                               l((r + 1) % n, (col + 1) % n)));
            }
        }
        const auto s = gsp::order_and_normalize(
            gsp::spectral_decompose(gsp::cycle_graph(n).adjacency));
        trace_gap = std::max(
            trace_gap, std::abs(s.grid.delta_omega.sum() - 2.0 * kPi));
    }

    // vm_apply two-path agreement
    const auto c = gsp::compute_vm(gsp::demo_graph(gsp::DemoKind::G2, 8), {}, "g2");
    double two_path = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        Signal x(8);
        for (Eigen::Index i = 0; i < 8; ++i) {
            x[i] = Complex(gauss(rng), gauss(rng));
        }
        two_path = std::max(
            two_path, max_abs(Signal(gsp::vm_apply_product(c.vm, x) -
                                     gsp::vm_apply_accumulate(c.vm, x))));
    }

    // CLI byte determinism
    const fs::path base =
        fs::temp_directory_path() / ("vmgraph_accept_" + std::to_string(::getpid()));
    fs::remove_all(base);
    fs::create_directories(base);
    const fs::path run_a = base / "a";
    const fs::path run_b = base / "b";
    bool deterministic =
        run_quiet("demo --kind g2 --n 8 --out \"" + run_a.string() + "\"") == 0 &&
        run_quiet("demo --kind g2 --n 8 --out \"" + run_b.string() + "\"") == 0;
    for (const char* name :
         {"Ug.json", "Ug.re.csv", "Ug.im.csv", "coords.csv", "y.csv"}) {
        deterministic = deterministic && !slurp(run_a / name).empty() &&
                        slurp(run_a / name) == slurp(run_b / name);
    }
    fs::remove_all(base);

    detail = "round trip " + fmt(rt) + ", exp(log S0) " + fmt(exp_log) +
             ", circulant " + fmt(circ) + ", ones " + fmt(ones_res) +
             ", trace gap " + fmt(trace_gap) + ", two-path " + fmt(two_path) +
             ", CLI " + (deterministic ? "byte-identical" : "NONDETERMINISTIC");
    return rt <= 1e-10 && exp_log <= 1e-10 && circ <= 1e-12 &&
           ones_res <= 1e-12 && trace_gap <= 1e-12 && two_path <= 1e-12 &&
           deterministic;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") {
            g_cli = argv[i + 1];
        } else if (flag == "--golden") {
            g_golden = argv[i + 1];
        } else {
            std::fprintf(stderr, "unknown flag %s\n", flag.c_str());
            return 2;
        }
    }
    if (g_cli.empty() || g_golden.empty()) {
        std::fprintf(stderr, "usage: acceptance --cli PATH --golden DIR\n");
        return 2;
    }

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"cycle VM is the index ramp", criterion_cycle_ramp},
        {"GFT to DFT reduction", criterion_dft_reduction},
        {"duality similarity", criterion_duality_similarity},
        {"shift-generator identity", criterion_shift_generator},
        {"spectral differentiation exactness", criterion_spectral_differentiation},
        {"complexity of non-cycle VM", criterion_complexity},
        {"qualitative coordinates", criterion_coordinates},
        {"zero-eigenvalue behavior", criterion_zero_eigenvalue},
        {"property suites", criterion_properties},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %zu: %s (%s)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed != 0) {
        std::printf("%d of 9 criteria failed\n", failed);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
