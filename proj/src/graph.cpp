#include "gsp/graph.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace gsp {

namespace {

bool entry_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

void check_graph_invariants(const Graph& g) {
    if (g.n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "graph needs at least 2 vertices, got " + std::to_string(g.n));
    }
    if (g.adjacency.rows() != g.n || g.adjacency.cols() != g.n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "adjacency must be " + std::to_string(g.n) + "x" +
                        std::to_string(g.n));
    }
    for (Eigen::Index i = 0; i < g.n; ++i) {
        for (Eigen::Index j = 0; j < g.n; ++j) {
            if (!entry_finite(g.adjacency(i, j))) {
                throw Error(ErrorCode::NonFiniteWeight,
                            "non-finite adjacency entry",
                            {static_cast<long>(i), static_cast<long>(j)});
            }
        }
    }
}

Graph graph_from_edge_list(Eigen::Index n, const std::vector<Edge>& edges,
                           bool directed) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "graph needs at least 2 vertices, got " + std::to_string(n));
    }
    Graph g{n, Matrix::Zero(n, n)};
    std::set<std::pair<Eigen::Index, Eigen::Index>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "edge " + std::to_string(k) + " references vertex outside [0, " +
                            std::to_string(n) + ")",
                        {static_cast<long>(k)});
        }
        if (!std::isfinite(e.weight)) {
            throw Error(ErrorCode::NonFiniteWeight,
                        "edge " + std::to_string(k) + " has a non-finite weight",
                        {static_cast<long>(k)});
        }
        const std::pair<Eigen::Index, Eigen::Index> key =
            directed ? std::make_pair(e.src, e.dst)
                     : std::make_pair(std::min(e.src, e.dst),
                                      std::max(e.src, e.dst));
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(e.src) + ", " +
                            std::to_string(e.dst) + ") appears more than once",
                        {static_cast<long>(k)});
        }
        // an edge src->dst feeds vertex dst
        g.adjacency(e.dst, e.src) = e.weight;
        if (!directed) g.adjacency(e.src, e.dst) = e.weight;
    }
    return g;
}

Graph cycle_graph(Eigen::Index n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "cycle graph needs at least 2 vertices, got " + std::to_string(n));
    }
    Graph g{n, Matrix::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        g.adjacency(i, (i - 1 + n) % n) = 1.0;
    }
    return g;
}

Graph demo_graph(DemoKind kind, Eigen::Index n) {
    switch (kind) {
        case DemoKind::G1:
            return cycle_graph(n);
        case DemoKind::G2: {
            if (n < 3) {
                throw Error(ErrorCode::InvalidSize,
                            "g2 needs at least 3 vertices, got " + std::to_string(n));
            }
            Graph g = cycle_graph(n);
            g.adjacency(2, 0) = 1.0;  // chord v0 -> v2
            return g;
        }
        case DemoKind::G3: {
            if (n < 4) {
                throw Error(ErrorCode::InvalidSize,
                            "g3 needs at least 4 vertices, got " + std::to_string(n));
            }
            Graph g{n, Matrix::Zero(n, n)};
            for (Eigen::Index i = 0; i < n; ++i) {
                g.adjacency((i + 1) % n, i) = 1.0;
                g.adjacency((i + 2) % n, i) = 1.0;
            }
            return g;
        }
    }
    throw Error(ErrorCode::UnknownKind, "unknown demo graph kind");
}

DemoKind demo_kind_from_string(std::string_view name) {
    if (name == "g1" || name == "G1") return DemoKind::G1;
    if (name == "g2" || name == "G2") return DemoKind::G2;
    if (name == "g3" || name == "G3") return DemoKind::G3;
    throw Error(ErrorCode::UnknownKind,
                "unknown demo graph kind '" + std::string(name) + "'");
}

const char* to_string(DemoKind kind) {
    switch (kind) {
        case DemoKind::G1: return "g1";
        case DemoKind::G2: return "g2";
        case DemoKind::G3: return "g3";
    }
    return "?";
}

GraphDiagnostics validate(const Graph& g) {
    GraphDiagnostics d;
    d.n = g.n;
    d.symmetric = true;
    for (Eigen::Index i = 0; i < g.n; ++i) {
        for (Eigen::Index j = 0; j < g.n; ++j) {
            Complex z = g.adjacency(i, j);
            if (z != Complex(0.0, 0.0)) {
                ++d.nonzero_count;
                d.max_abs = std::max(d.max_abs, std::abs(z));
                if (z.imag() != 0.0) d.has_complex_entries = true;
            }
            if (g.adjacency(i, j) != g.adjacency(j, i)) d.symmetric = false;
        }
    }
    for (Eigen::Index v = 0; v < g.n; ++v) {
        bool connected = false;
        for (Eigen::Index k = 0; k < g.n && !connected; ++k) {
            if (g.adjacency(v, k) != Complex(0.0, 0.0) ||
                g.adjacency(k, v) != Complex(0.0, 0.0)) {
                connected = true;
            }
        }
        if (!connected) d.isolated.push_back(v);
    }
    return d;
}

}  // namespace gsp
