#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gsp/duality.hpp"
#include "gsp/gft.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"
#include "gsp/spectral.hpp"

namespace {

using gsp::Complex;
using gsp::Graph;
using gsp::Signal;

struct GraphSource {
    std::string path;
    std::string format = "edges";
    std::string kind;
    long n = 8;
};

struct PipelineFlags {
    double eps_freq = 1e-8;
    double tol = 1e-9;
    std::string policy = "error";
    double perturb_eps = 1e-6;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& f) {
    cmd->add_option("--eps-freq", f.eps_freq,
                    "minimum circular frequency spacing");
    cmd->add_option("--tol", f.tol, "eigendecomposition residual tolerance");
    cmd->add_option("--zero-freq-policy", f.policy,
                    "zero-modulus eigenvalue handling: error, midpoint, perturb");
    cmd->add_option("--perturb-eps", f.perturb_eps,
                    "shift added under the perturb policy");
}

void add_graph_flags(CLI::App* cmd, GraphSource& s, bool allow_kind = true) {
    cmd->add_option("--graph", s.path, "graph file to load");
    cmd->add_option("--format", s.format, "graph file format: edges, csv, json");
    if (allow_kind) {
        cmd->add_option("--kind", s.kind, "demonstration graph: g1, g2, g3");
        cmd->add_option("--n", s.n, "vertex count for --kind");
    }
}

gsp::VmOptions make_options(const PipelineFlags& f) {
    gsp::VmOptions opts;
    opts.eps_freq = f.eps_freq;
    opts.tol = f.tol;
    opts.policy = gsp::zero_freq_policy_from_string(f.policy);
    opts.perturb_eps = f.perturb_eps;
    return opts;
}

Graph resolve_graph(const GraphSource& s, std::string& label) {
    if (!s.path.empty() && !s.kind.empty()) {
        throw gsp::Error(gsp::ErrorCode::ParseError,
                         "--graph and --kind are mutually exclusive");
    }
    if (!s.kind.empty()) {
        label = "demo:" + s.kind;
        return gsp::demo_graph(gsp::demo_kind_from_string(s.kind), s.n);
    }
    if (s.path.empty()) {
        throw gsp::Error(gsp::ErrorCode::ParseError,
                         "one of --graph or --kind is required");
    }
    label = "file:" + s.path;
    return gsp::load_graph_file(s.path, gsp::graph_format_from_string(s.format));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw gsp::Error(gsp::ErrorCode::ParseError,
                         "cannot write '" + path.string() + "'");
    }
    out << content;
}

void warn_conditioning(const gsp::VmComputation& c) {
    if (c.spectrum.decomp.vcond_warning) {
        std::cerr << "# warning: eigenvector condition "
                  << gsp::format_double(c.spectrum.decomp.vcond)
                  << " exceeds 1e10; results may lose precision\n";
    }
}

nlohmann::ordered_json coords_json(const Eigen::VectorXd& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v[i] == 0.0 ? 0.0 : v[i]);
    }
    return a;
}

void write_bundle(const Graph& g, const gsp::VmOptions& opts,
                  const std::string& label, const std::string& out_dir) {
    const gsp::VmComputation c = gsp::compute_vm(g, opts, label);
    warn_conditioning(c);

    const Eigen::VectorXd l1 = gsp::l1_coordinates(c.vm);
    const Eigen::VectorXd norm = gsp::normalized_coordinates(l1);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    const nlohmann::ordered_json mat = gsp::matrix_to_json(c.vm.matrix);
    nlohmann::ordered_json ug;
    ug["n"] = g.n;
    ug["U"] = {{"re", mat["re"]}, {"im", mat["im"]}};
    ug["coords_l1"] = coords_json(l1);
    ug["coords_norm"] = coords_json(norm);
    ug["omegas"] = coords_json(c.spectrum.grid.omegas);
    ug["policy"] = gsp::to_string(opts.policy);
    ug["non_paper"] = opts.policy != gsp::ZeroFreqPolicy::Error;
    if (opts.policy == gsp::ZeroFreqPolicy::Perturb) {
        ug["perturb_eps"] = opts.perturb_eps;
    }
    write_file(dir / "Ug.json", ug.dump(1) + "\n");

    write_file(dir / "Ug.re.csv", gsp::matrix_part_to_csv(c.vm.matrix, false));
    write_file(dir / "Ug.im.csv", gsp::matrix_part_to_csv(c.vm.matrix, true));

    std::string coords = "vertex,l1,normalized\n";
    for (Eigen::Index i = 0; i < g.n; ++i) {
        coords += std::to_string(i) + "," + gsp::format_double(l1[i]) + "," +
                  gsp::format_double(norm[i]) + "\n";
    }
    write_file(dir / "coords.csv", coords);

    const Signal y = gsp::vm_apply(c.vm, Signal::Ones(g.n));
    std::string ycsv = "vertex,re,im,abs\n";
    for (Eigen::Index i = 0; i < g.n; ++i) {
        ycsv += std::to_string(i) + "," +
                gsp::format_double(y[i].real() == 0.0 ? 0.0 : y[i].real()) + "," +
                gsp::format_double(y[i].imag() == 0.0 ? 0.0 : y[i].imag()) + "," +
                gsp::format_double(std::abs(y[i])) + "\n";
    }
    write_file(dir / "y.csv", ycsv);
}

int run(int argc, char** argv) {
    CLI::App app{"vertex multiplication operators for directed graphs"};
    app.require_subcommand(1);

    // demo
    auto* demo = app.add_subcommand("demo", "write the bundle for a demo graph");
    std::string demo_kind;
    long demo_n = 8;
    std::string demo_out;
    PipelineFlags demo_flags;
    demo->add_option("--kind", demo_kind, "demonstration graph: g1, g2, g3")
        ->required();
    demo->add_option("--n", demo_n, "vertex count (default 8)");
    demo->add_option("--out", demo_out, "output directory")->required();
    add_pipeline_flags(demo, demo_flags);

    // compute
    auto* compute =
        app.add_subcommand("compute", "write the bundle for a loaded graph");
    GraphSource compute_src;
    std::string compute_out;
    PipelineFlags compute_flags;
    add_graph_flags(compute, compute_src);
    compute->add_option("--out", compute_out, "output directory")->required();
    add_pipeline_flags(compute, compute_flags);

    // coords
    auto* coords = app.add_subcommand("coords", "per-vertex scalar coordinates");
    GraphSource coords_src;
    std::string coords_norm = "l1";
    bool coords_normalize = false;
    PipelineFlags coords_flags;
    add_graph_flags(coords, coords_src);
    coords->add_option("--norm", coords_norm, "column norm: l1, l2, linf");
    coords->add_flag("--normalize", coords_normalize,
                     "append coordinates rescaled onto [0, N-1]");
    add_pipeline_flags(coords, coords_flags);

    // gft
    auto* gft_cmd = app.add_subcommand("gft", "graph Fourier transform");
    GraphSource gft_src;
    std::string gft_signal;
    bool gft_inverse = false;
    PipelineFlags gft_flags;
    add_graph_flags(gft_cmd, gft_src);
    gft_cmd->add_option("--signal", gft_signal, "signal file")->required();
    gft_cmd->add_flag("--inverse", gft_inverse, "apply V instead of V^-1");
    add_pipeline_flags(gft_cmd, gft_flags);

    // diff
    auto* diff = app.add_subcommand("diff", "differential operator on a grid");
    std::string diff_points;
    double diff_period = 0.0;
    std::string diff_signal;
    diff->add_option("--points", diff_points, "sample points, one per line")
        ->required();
    diff->add_option("--period", diff_period, "period T")->required();
    diff->add_option("--signal", diff_signal, "signal file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }

    if (demo->parsed()) {
        if (demo_n < 4) {
            throw gsp::Error(gsp::ErrorCode::InvalidSize,
                             "demo graphs need n >= 4");
        }
        const Graph g =
            gsp::demo_graph(gsp::demo_kind_from_string(demo_kind), demo_n);
        write_bundle(g, make_options(demo_flags), "demo:" + demo_kind, demo_out);
        return 0;
    }

    if (compute->parsed()) {
        std::string label;
        const Graph g = resolve_graph(compute_src, label);
        write_bundle(g, make_options(compute_flags), label, compute_out);
        return 0;
    }

    if (coords->parsed()) {
        std::string label;
        const Graph g = resolve_graph(coords_src, label);
        const gsp::VmComputation c =
            gsp::compute_vm(g, make_options(coords_flags), label);
        warn_conditioning(c);
        const Eigen::VectorXd raw = gsp::coordinates(
            c.vm, gsp::coord_norm_from_string(coords_norm));
        std::string out = coords_normalize ? "vertex,raw,normalized\n"
                                           : "vertex,raw\n";
        Eigen::VectorXd norm;
        if (coords_normalize) norm = gsp::normalized_coordinates(raw);
        for (Eigen::Index i = 0; i < g.n; ++i) {
            out += std::to_string(i) + "," + gsp::format_double(raw[i]);
            if (coords_normalize) out += "," + gsp::format_double(norm[i]);
            out += "\n";
        }
        std::cout << out;
        return 0;
    }

    if (gft_cmd->parsed()) {
        std::string label;
        const Graph g = resolve_graph(gft_src, label);
        const gsp::VmComputation c =
            gsp::compute_vm(g, make_options(gft_flags), label);
        warn_conditioning(c);
        const Signal x = gsp::load_signal_file(gft_signal);
        const Signal out = gft_inverse ? gsp::igft(c.spectrum, x)
                                       : gsp::gft(c.spectrum, x);
        std::cout << gsp::signal_to_csv(out);
        return 0;
    }

    if (diff->parsed()) {
        const Eigen::VectorXd pts = gsp::load_points_file(diff_points);
        const gsp::SamplingGrid grid = gsp::make_sampling_grid(pts, diff_period);
        const gsp::Matrix d = gsp::differential_operator(grid);
        const Signal x = gsp::load_signal_file(diff_signal);
        if (x.size() != d.rows()) {
            throw gsp::Error(gsp::ErrorCode::DimensionMismatch,
                             "signal length " + std::to_string(x.size()) +
                                 " does not match " + std::to_string(d.rows()) +
                                 " sample points");
        }
        std::cout << gsp::signal_to_csv(d * x);
        return 0;
    }

    return 0;
}

int emit_error(gsp::ErrorCode code, const std::string& detail,
               const std::vector<long>& indices) {
    nlohmann::ordered_json j;
    j["error"] = gsp::to_string(code);
    j["detail"] = detail;
    j["indices"] = indices;
    std::cerr << j.dump() << "\n";
    return gsp::is_input_error(code) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        return emit_error(gsp::ErrorCode::ParseError, e.what(), {});
    } catch (const gsp::Error& e) {
        return emit_error(e.code(), e.detail(), e.indices());
    } catch (const std::exception& e) {
        return emit_error(gsp::ErrorCode::InternalError, e.what(), {});
    }
}
