#include "parares/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "parares/errors.hpp"

namespace parares {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ring(int n) {
    if (n < 3) throw NumericError("lattice size must be >= 3");
}

int ipow(int base, int exp) {
    int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Lexicographic rank <-> multi-index, first coordinate slowest.
std::vector<int> unrank(int rank, int n, int dims) {
    std::vector<int> idx(dims, 0);
    for (int c = dims - 1; c >= 0; --c) {
        idx[c] = rank % n;
        rank /= n;
    }
    return idx;
}

int rank_of(const std::vector<int>& idx, int n) {
    int r = 0;
    for (int v : idx) r = r * n + v;
    return r;
}

double mode_eigenvalue(const std::vector<int>& idx, double theta) {
    double s = 0.0;
    for (int m : idx) s += 1.0 - std::cos(m * theta);
    return 2.0 * s;
}

int conjugate_orbit_size(const std::vector<int>& idx, int n) {
    int size = 1;
    for (int m : idx)
        if (m != 0 && 2 * m != n) size *= 2;
    return size;
}

// Distinct eigenvalue classes of a lattice spectrum, ascending. Returns
// for each mode-rank its class id (0 = zero class).
struct EigenClasses {
    std::vector<double> class_eigenvalue;  // ascending, [0] == 0
    std::vector<int> class_of;             // per mode rank
};

EigenClasses classify_modes(const std::vector<LatticeMode>& modes) {
    EigenClasses ec;
    std::vector<int> order(modes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return modes[a].eigenvalue < modes[b].eigenvalue;
    });
    double lam_max = modes[order.back()].eigenvalue;
    const double tol = 1e-9 * std::max(1.0, lam_max);
    ec.class_of.assign(modes.size(), 0);
    double prev = -1e300;
    for (int rank : order) {
        const double lam = modes[rank].eigenvalue;
        if (lam - prev > tol) ec.class_eigenvalue.push_back(lam);
        ec.class_of[rank] = static_cast<int>(ec.class_eigenvalue.size()) - 1;
        prev = lam;
    }
    return ec;
}

}  // namespace

RingSpec make_ring_spec(int n, int dims) {
    require_ring(n);
    if (dims < 1) throw NumericError("lattice dimension must be >= 1");
    return RingSpec{n, dims, 2.0 * kPi / n};
}

double delta_factor(double t) {
    const double q = 2.0 - 2.0 * std::cos(t);
    if (q <= 0.0) return 0.0;
    const double mod = std::hypot(1.0 - std::cos(t), std::sin(t));
    return mod * std::pow(q, -0.25);
}

std::vector<LatticeMode> torus_spectrum(int n, int dims) {
    const RingSpec spec = make_ring_spec(n, dims);
    const int total = ipow(n, dims);
    std::vector<LatticeMode> modes(total);
    for (int r = 0; r < total; ++r) {
        LatticeMode& m = modes[r];
        m.index = unrank(r, n, dims);
        m.eigenvalue = mode_eigenvalue(m.index, spec.theta);
        m.frequency = std::sqrt(m.eigenvalue);
        m.multiplicity_class = conjugate_orbit_size(m.index, n);
    }
    return modes;
}

std::vector<LatticeMode> ring_spectrum(int n) { return torus_spectrum(n, 1); }

std::vector<CriticalFrequency> torus_critical_frequencies(int n, int dims) {
    const auto modes = torus_spectrum(n, dims);
    const EigenClasses ec = classify_modes(modes);
    const int nclasses = static_cast<int>(ec.class_eigenvalue.size());
    std::vector<CriticalFrequency> out;
    for (int a = 1; a < nclasses; ++a) {
        for (int b = a; b < nclasses; ++b) {
            CriticalFrequency cf;
            cf.class_l = a;
            cf.class_m = b;
            cf.omega = std::sqrt(ec.class_eigenvalue[a]) + std::sqrt(ec.class_eigenvalue[b]);
            out.push_back(cf);
        }
    }
    std::sort(out.begin(), out.end(), [](const CriticalFrequency& x, const CriticalFrequency& y) {
        if (x.omega != y.omega) return x.omega < y.omega;
        if (x.class_l != y.class_l) return x.class_l < y.class_l;
        return x.class_m < y.class_m;
    });
    return out;
}

std::vector<CriticalFrequency> ring_critical_frequencies(int n) {
    return torus_critical_frequencies(n, 1);
}

std::vector<LatticeSlope> ring_edge_tongue_slopes(int n, int i, int k) {
    require_ring(n);
    const int d = std::abs(i - k);
    if (i < 0 || k < 0 || i >= n || k >= n || (d != 1 && d != n - 1))
        throw NumericError("forced edge is not a ring edge");
    return ring_subnetwork_slopes(n, {d == 1 ? std::min(i, k) : std::max(i, k)});
}

std::vector<LatticeSlope> ring_subnetwork_slopes(int n, const std::vector<int>& edge_starts) {
    require_ring(n);
    if (edge_starts.empty()) throw NumericError("no forced edges given");
    {
        std::set<int> seen;
        for (int s : edge_starts) {
            if (s < 0 || s >= n) throw NumericError("forced edge is not a ring edge");
            if (!seen.insert(s).second) throw NumericError("duplicate forced edge");
        }
    }
    const double theta = 2.0 * kPi / n;
    const int nclasses = n / 2;
    const auto class_dim = [&](int c) { return (n % 2 == 0 && c == n / 2) ? 1 : 2; };
    const auto freq = [&](int c) { return std::sqrt(2.0 * (1.0 - std::cos(c * theta))); };

    std::vector<LatticeSlope> out;
    using cplx = std::complex<double>;
    for (int l = 1; l <= nclasses; ++l) {
        for (int m = l; m <= nclasses; ++m) {
            // Couplings of the unit-norm Fourier modes through the forced
            // edge set: alpha pairs mode m with mode l, beta pairs the
            // conjugate of mode m with mode l.
            cplx sum_diff{0.0, 0.0}, sum_same{0.0, 0.0};
            for (int s : edge_starts) {
                sum_diff += std::polar(1.0, theta * s * (l - m));
                sum_same += std::polar(1.0, theta * s * (l + m));
            }
            const cplx one{1.0, 0.0};
            const cplx fl = one - std::polar(1.0, theta * l);
            const double alpha =
                std::abs((one - std::polar(1.0, -theta * m)) * fl * sum_diff) / n;
            const double beta = std::abs((one - std::polar(1.0, theta * m)) * fl * sum_same) / n;

            double coupling;  // 2-induced norm over the conjugate-pair bases
            if (class_dim(l) == 2 && class_dim(m) == 2)
                coupling = alpha + beta;
            else if (class_dim(l) == 1 && class_dim(m) == 1)
                coupling = alpha;
            else
                coupling = std::sqrt(alpha * alpha + beta * beta);

            LatticeSlope ls;
            ls.class_l = l;
            ls.class_m = m;
            ls.omega = freq(l) + freq(m);
            ls.slope = coupling / (2.0 * std::sqrt(freq(l) * freq(m)));
            out.push_back(ls);
        }
    }
    std::sort(out.begin(), out.end(), [](const LatticeSlope& x, const LatticeSlope& y) {
        if (x.omega != y.omega) return x.omega < y.omega;
        if (x.class_l != y.class_l) return x.class_l < y.class_l;
        return x.class_m < y.class_m;
    });
    return out;
}

std::vector<TorusSlopeBound> torus_edge_slope_bound(int n, int dims,
                                                    const std::vector<int>& edge_base,
                                                    int edge_coord) {
    const RingSpec spec = make_ring_spec(n, dims);
    if (edge_coord < 0 || edge_coord >= dims) throw NumericError("edge coordinate out of range");
    if (static_cast<int>(edge_base.size()) != dims)
        throw NumericError("edge base node must have one component per dimension");
    for (int v : edge_base)
        if (v < 0 || v >= n) throw NumericError("edge base node out of range");

    const auto modes = torus_spectrum(n, dims);
    const EigenClasses ec = classify_modes(modes);
    const double total = static_cast<double>(ipow(n, dims));

    // Sum of |1 - e^{-j theta q_c}|^2 over the members of each class:
    // the squared norm of the eigenspace basis projected onto the edge
    // difference vector, times N^d.
    std::vector<double> class_proj(ec.class_eigenvalue.size(), 0.0);
    for (const auto& m : modes) {
        const double t = spec.theta * m.index[edge_coord];
        class_proj[ec.class_of[rank_of(m.index, n)]] += 2.0 - 2.0 * std::cos(t);
    }

    std::vector<TorusSlopeBound> out;
    const int count = static_cast<int>(modes.size());
    for (int a = 1; a < count; ++a) {
        for (int b = a; b < count; ++b) {
            const bool flip = ec.class_of[a] > ec.class_of[b];
            const LatticeMode& ml = modes[flip ? b : a];
            const LatticeMode& mm = modes[flip ? a : b];
            TorusSlopeBound tb;
            tb.index_l = ml.index;
            tb.index_m = mm.index;
            tb.class_l = ec.class_of[flip ? b : a];
            tb.class_m = ec.class_of[flip ? a : b];
            tb.omega = ml.frequency + mm.frequency;
            const double geo = std::sqrt(ml.frequency * mm.frequency);
            const double el = std::hypot(1.0 - std::cos(spec.theta * ml.index[edge_coord]),
                                         std::sin(spec.theta * ml.index[edge_coord]));
            const double em = std::hypot(1.0 - std::cos(spec.theta * mm.index[edge_coord]),
                                         std::sin(spec.theta * mm.index[edge_coord]));
            tb.lower_bound = el * em / (2.0 * total * geo);
            tb.exact_slope = std::sqrt(class_proj[tb.class_l] * class_proj[tb.class_m]) /
                             (total * 2.0 * geo);
            out.push_back(tb);
        }
    }
    return out;
}

Graph ring_graph(int n) {
    require_ring(n);
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1.0});
    return g;
}

Graph torus_graph(int n, int dims) {
    make_ring_spec(n, dims);  // validates n, dims
    Graph g;
    g.n = ipow(n, dims);
    for (int r = 0; r < g.n; ++r) {
        const auto idx = unrank(r, n, dims);
        for (int c = 0; c < dims; ++c) {
            auto nb = idx;
            nb[c] = (nb[c] + 1) % n;
            g.edges.push_back({r, rank_of(nb, n), 1.0});
        }
    }
    return g;
}

std::vector<Tongue> lattice_tongues(const std::vector<LatticeSlope>& slopes) {
    std::vector<Tongue> out;
    for (const LatticeSlope& s : slopes) {
        Tongue t;
        t.omega0 = s.omega;
        t.slope = s.slope;
        t.group_l = s.class_l;
        t.group_m = s.class_m;
        t.order = 1;
        t.controllable = s.slope > 0.0;
        out.push_back(t);
    }
    return out;
}

}  // namespace parares
