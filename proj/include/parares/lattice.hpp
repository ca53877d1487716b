#pragma once

#include <vector>

#include "parares/graph.hpp"
#include "parares/matrix.hpp"
#include "parares/tongue.hpp"

namespace parares {

/// Periodic lattice geometry: nodes_per_ring^dims nodes, theta = 2 pi / N.
struct RingSpec {
    int nodes_per_ring = 0;
    int dims = 1;
    double theta = 0.0;
};
RingSpec make_ring_spec(int n, int dims = 1);

/// One Fourier mode of a periodic lattice. multiplicity_class is the size
/// of the orbit of the index under component-wise negation mod N (the
/// conjugate pairing m <-> N - m).
struct LatticeMode {
    std::vector<int> index;
    double eigenvalue = 0.0;
    double frequency = 0.0;
    int multiplicity_class = 1;
};

/// |1 - e^{jt}| (2 - 2 cos t)^{-1/4}; peaks at sqrt(2) for t = pi.
double delta_factor(double t);

std::vector<LatticeMode> ring_spectrum(int n);
std::vector<LatticeMode> torus_spectrum(int n, int dims);

/// Distinct non-zero eigenvalue classes are numbered ascending starting
/// at 1 (0 is the zero class), matching the group ids a spectral
/// decomposition of the assembled Laplacian produces.
struct CriticalFrequency {
    int class_l = 0;
    int class_m = 0;
    double omega = 0.0;
};
std::vector<CriticalFrequency> ring_critical_frequencies(int n);
std::vector<CriticalFrequency> torus_critical_frequencies(int n, int dims);

struct LatticeSlope {
    int class_l = 0;
    int class_m = 0;
    double omega = 0.0;
    double slope = 0.0;
};

/// First-order tongue slopes for a single forced ring edge (i,k),
/// |i - k| = 1 mod N. Independent of which edge is forced.
std::vector<LatticeSlope> ring_edge_tongue_slopes(int n, int i, int k);

/// Slopes when the ring edges (s, s+1 mod N) for s in edge_starts are
/// forced together. Reduces to ring_edge_tongue_slopes for one edge.
std::vector<LatticeSlope> ring_subnetwork_slopes(int n, const std::vector<int>& edge_starts);

/// Per index pair: the closed-form lower bound for the tongue slope of a
/// forced lattice edge, and the exact value computed as the 2-induced
/// norm over the full eigenspace bases. exact_slope >= lower_bound.
struct TorusSlopeBound {
    std::vector<int> index_l, index_m;
    int class_l = 0, class_m = 0;
    double omega = 0.0;
    double lower_bound = 0.0;
    double exact_slope = 0.0;
};
std::vector<TorusSlopeBound> torus_edge_slope_bound(int n, int dims,
                                                    const std::vector<int>& edge_base,
                                                    int edge_coord);

Graph ring_graph(int n);
Graph torus_graph(int n, int dims);

/// Tongue-list view of analytic slopes (order 1, controllable iff
/// slope > 0), for the shared CSV format.
std::vector<Tongue> lattice_tongues(const std::vector<LatticeSlope>& slopes);

}  // namespace parares
