#pragma once

#include <string>
#include <vector>

#include "parares/matrix.hpp"

namespace parares {

struct Edge {
    int i = 0;
    int k = 0;
    double w = 0.0;
};

/// Weighted undirected graph. Edges are stored as parsed; validity
/// (indices in range, i != k, positive weights, no duplicate pairs)
/// is established by load_graph and re-checked by laplacian().
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
};

/// Parses the line-based graph format:
///   # comment
///   nodes N
///   edge I K W
/// Throws ParseError with a 1-based line number on malformed input,
/// duplicate edges, out-of-range indices, self-loops or weights <= 0.
Graph load_graph(const std::string& text);

/// load_graph on the contents of a file. Throws ParseError if the file
/// cannot be read.
Graph load_graph_file(const std::string& path);

/// Throws ParseError if the graph violates its invariants.
void validate_graph(const Graph& g);

/// Graph Laplacian: off-diagonals -w, diagonal the negated sum of the
/// row's off-diagonal entries (summed in ascending column order), so
/// L[i][i] == -sum_{k!=i} L[i][k] holds bitwise and L*1 == 0 exactly.
SymmetricMatrix laplacian(const Graph& g);

/// Rank-1 Laplacian of the single edge (i,k) with unit weight.
SymmetricMatrix edge_laplacian(int n, int i, int k);

}  // namespace parares
