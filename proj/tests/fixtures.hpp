#pragma once

#include <string>

#include "parares/graph.hpp"
#include "parares/lattice.hpp"

namespace fixtures {

inline parares::Graph two_node() {
    return parares::load_graph("nodes 2\nedge 0 1 1.0\n");
}

inline parares::Graph triangle() {
    return parares::load_graph("nodes 3\nedge 0 1 1\nedge 1 2 1\nedge 0 2 1\n");
}

// Non-zero eigenvalues 6 - sqrt(3) and 6 + sqrt(3): all distinct.
inline parares::Graph weighted_triangle() {
    return parares::load_graph("nodes 3\nedge 0 1 1\nedge 1 2 2\nedge 0 2 3\n");
}

inline parares::Graph path3() {
    return parares::load_graph("nodes 3\nedge 0 1 1\nedge 1 2 1\n");
}

// Two components; eigenvalues {0, 0, 2, 4}, frequencies {sqrt(2), 2}.
inline parares::Graph two_components() {
    return parares::load_graph("nodes 4\nedge 0 1 1\nedge 2 3 2\n");
}

// Ring with deterministic near-unit weights (in lieu of sampled normal
// perturbations with sigma = 0.01): splits all degenerate eigenspaces.
inline parares::Graph perturbed_ring(int n) {
    parares::Graph g = parares::ring_graph(n);
    const double bumps[] = {0.0132, -0.0074, 0.0051, -0.0118, 0.0096,
                            -0.0027, 0.0143, -0.0089, 0.0038, -0.0152,
                            0.0067, -0.0041, 0.0109, -0.0126, 0.0022, -0.0063};
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        g.edges[i].w = 1.0 + bumps[i % (sizeof(bumps) / sizeof(bumps[0]))];
    return g;
}

}  // namespace fixtures
