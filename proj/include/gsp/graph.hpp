#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gsp/error.hpp"

namespace gsp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// A graph signal: one complex value per vertex.
using Signal = Eigen::VectorXcd;

/**
 * A finite weighted directed graph stored as a dense complex adjacency
 * matrix. Entry adjacency(i, j) is the weight of the connection feeding
 * vertex i from vertex j, so the n-cycle has its unit entries at
 * (i, (i-1) mod n) and acts on signals as the circular forward shift.
 */
struct Graph {
    Eigen::Index n = 0;
    Matrix adjacency;
};

struct Edge {
    Eigen::Index src = 0;
    Eigen::Index dst = 0;
    double weight = 1.0;
};

enum class DemoKind { G1, G2, G3 };

/// Builds a graph from directed edges; an edge src->dst sets
/// adjacency(dst, src). Repeated (src, dst) pairs are rejected.
Graph graph_from_edge_list(Eigen::Index n, const std::vector<Edge>& edges,
                           bool directed = true);

/// The n-vertex directed cycle; its adjacency equals the circular
/// forward-shift matrix.
Graph cycle_graph(Eigen::Index n);

/// The three demonstration graphs: G1 is the cycle, G2 adds the chord
/// v0->v2, G3 connects every vertex to the next two (wrapping mod n).
Graph demo_graph(DemoKind kind, Eigen::Index n);

DemoKind demo_kind_from_string(std::string_view name);
const char* to_string(DemoKind kind);

struct GraphDiagnostics {
    Eigen::Index n = 0;
    bool symmetric = false;
    std::vector<Eigen::Index> isolated;
    Eigen::Index nonzero_count = 0;
    double max_abs = 0.0;
    bool has_complex_entries = false;
};

/// Pure report: symmetry, isolated vertices, entry statistics.
GraphDiagnostics validate(const Graph& g);

/// Enforces the Graph invariants (n >= 2, square, finite entries).
void check_graph_invariants(const Graph& g);

}  // namespace gsp
