#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "parares/errors.hpp"
#include "parares/fmt.hpp"
#include "parares/graph.hpp"
#include "parares/lattice.hpp"
#include "parares/mathieu.hpp"
#include "parares/modes.hpp"
#include "parares/spectrum.hpp"
#include "parares/sweep.hpp"
#include "parares/tongue.hpp"

namespace {

using namespace parares;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw ParseError("failed writing '" + path + "'");
}

struct PredictArgs {
    std::string graph_file, forced_file, out_file, overlay_file;
    double ctrl_tol = -1.0;
    double eps_max = 0.1;
    int max_order = 1;
};

int run_predict(const PredictArgs& a) {
    const SymmetricMatrix l = laplacian(load_graph_file(a.graph_file));
    const SymmetricMatrix p = laplacian(load_graph_file(a.forced_file));
    const Spectrum s = spectral_decomposition(l);
    const double tol = a.ctrl_tol > 0.0 ? a.ctrl_tol : default_ctrl_tol(p);
    std::vector<Tongue> tongues = predict_first_order_tongues(s, p, tol);
    if (a.max_order >= 2) {
        const auto higher = predict_higher_order_frequencies(s, a.max_order);
        tongues.insert(tongues.end(), higher.begin(), higher.end());
        std::sort(tongues.begin(), tongues.end(), [](const Tongue& x, const Tongue& y) {
            if (x.omega0 != y.omega0) return x.omega0 < y.omega0;
            if (x.order != y.order) return x.order < y.order;
            if (x.group_l != y.group_l) return x.group_l < y.group_l;
            return x.group_m < y.group_m;
        });
    }
    write_file(a.out_file, tongue_csv(tongues));
    if (!a.overlay_file.empty())
        write_file(a.overlay_file, export_tongue_overlay(tongues, a.eps_max));
    return 0;
}

struct SweepArgs {
    std::string graph_file, forced_file, out_file;
    double omega_min = 0.0, omega_max = 0.0, eps_max = 0.0, stab_tol = kDefaultStabTol;
    int res_omega = 64, res_eps = 16, steps = 0, workers = 0;
    bool full_network = false;
};

int run_sweep(const SweepArgs& a) {
    SweepSpec spec;
    spec.laplacian = laplacian(load_graph_file(a.graph_file));
    spec.forcing = a.full_network ? spec.laplacian : laplacian(load_graph_file(a.forced_file));
    spec.omega_min = a.omega_min;
    spec.omega_max = a.omega_max;
    spec.eps_max = a.eps_max;
    spec.n_omega = a.res_omega;
    spec.n_eps = a.res_eps;
    spec.steps_override = a.steps;
    spec.stab_tol = a.stab_tol;
    spec.full_network = a.full_network;
    write_file(a.out_file, export_grid(sweep(spec, a.workers)));
    return 0;
}

struct MathieuArgs {
    double omega_n = 1.0, eps = 0.0, omega = 2.0;
    int steps = 0;
};

int run_mathieu(const MathieuArgs& a) {
    const MathieuResult r = mathieu_stability({a.omega_n, a.eps, a.omega}, a.steps);
    std::cout << (r.unstable ? "unstable" : "stable") << " growth_rate="
              << format_sig(r.growth_exponent) << " trace=" << format_sig(r.trace) << "\n";
    return 0;
}

struct RingArgs {
    std::string out_file;
    int n = 8;
    std::vector<int> forced_edges;
    bool full = false;
};

int run_ring(const RingArgs& a) {
    std::vector<int> edges = a.forced_edges;
    if (a.full) {
        edges.resize(a.n);
        for (int i = 0; i < a.n; ++i) edges[i] = i;
    } else if (edges.empty()) {
        edges = {0};
    }
    write_file(a.out_file, tongue_csv(lattice_tongues(ring_subnetwork_slopes(a.n, edges))));
    return 0;
}

struct TorusArgs {
    std::string out_file;
    int n = 4, dims = 2, edge_coord = 0;
};

int run_torus(const TorusArgs& a) {
    const auto bounds =
        torus_edge_slope_bound(a.n, a.dims, std::vector<int>(a.dims, 0), a.edge_coord);
    // The exact slope is a class-pair quantity; deduplicate index pairs.
    std::map<std::pair<int, int>, TorusSlopeBound> classes;
    for (const auto& b : bounds) classes.emplace(std::make_pair(b.class_l, b.class_m), b);
    std::vector<Tongue> tongues;
    for (const auto& [key, b] : classes) {
        Tongue t;
        t.omega0 = b.omega;
        t.slope = b.exact_slope;
        t.group_l = key.first;
        t.group_m = key.second;
        t.order = 1;
        t.controllable = t.slope > 0.0;
        tongues.push_back(t);
    }
    std::sort(tongues.begin(), tongues.end(), [](const Tongue& x, const Tongue& y) {
        if (x.omega0 != y.omega0) return x.omega0 < y.omega0;
        if (x.group_l != y.group_l) return x.group_l < y.group_l;
        return x.group_m < y.group_m;
    });
    write_file(a.out_file, tongue_csv(tongues));
    return 0;
}

struct ModesArgs {
    std::string graph_file, forced_file, out_file;
    double omega = 0.0, eps = 0.05, stab_tol = kDefaultStabTol;
    int steps = 0;
};

int run_modes(const ModesArgs& a) {
    const SymmetricMatrix l = laplacian(load_graph_file(a.graph_file));
    const SymmetricMatrix p = laplacian(load_graph_file(a.forced_file));
    const Spectrum s = spectral_decomposition(l);
    // Compare against the controllable tongue nearest to the requested
    // frequency.
    const auto tongues = predict_first_order_tongues(s, p, default_ctrl_tol(p));
    const Tongue* best = nullptr;
    for (const Tongue& t : tongues) {
        if (!t.controllable) continue;
        if (!best || std::abs(t.omega0 - a.omega) < std::abs(best->omega0 - a.omega)) best = &t;
    }
    if (!best) throw NumericError("no controllable tongue predicted for this forcing");
    const ForcedSystem sys{l, p, a.eps, a.omega};
    const int steps = a.steps > 0 ? a.steps : default_steps_per_period(sys);
    write_file(a.out_file, mode_report_csv(mode_report(sys, s, *best, steps, a.stab_tol)));
    return 0;
}

struct SpectrumArgs {
    std::string graph_file, out_file;
    double group_tol = -1.0;
};

int run_spectrum(const SpectrumArgs& a) {
    const Spectrum s = spectral_decomposition(laplacian(load_graph_file(a.graph_file)),
                                              a.group_tol);
    std::string out = "index,eigenvalue,frequency,group\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_sig(s.eigenvalues[i]);
        out += ',';
        out += format_sig(s.frequencies[i]);
        out += ',';
        out += std::to_string(s.group_of[i]);
        out += '\n';
    }
    write_file(a.out_file, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parametric-resonance analysis of oscillator networks"};
    app.require_subcommand(1);

    PredictArgs pa;
    auto* predict = app.add_subcommand(
        "predict", "Predict first-order instability tongues from the Laplacian spectrum");
    predict->add_option("--graph", pa.graph_file, "network graph file")->required();
    predict->add_option("--forced", pa.forced_file, "forced subnetwork graph file")->required();
    predict->add_option("--out", pa.out_file, "output tongue CSV")->required();
    predict->add_option("--ctrl-tol", pa.ctrl_tol, "controllability tolerance (default scale-relative)");
    predict->add_option("--max-order", pa.max_order, "also list subharmonic frequencies up to this order");
    predict->add_option("--overlay", pa.overlay_file, "also write wedge boundary CSV here");
    predict->add_option("--eps-max", pa.eps_max, "eps extent of the overlay boundaries");

    SweepArgs sa;
    auto* sw = app.add_subcommand("sweep", "Classify an (omega, eps) grid by Floquet analysis");
    sw->add_option("--graph", sa.graph_file, "network graph file")->required();
    sw->add_option("--forced", sa.forced_file, "forced subnetwork graph file");
    sw->add_option("--omega-min", sa.omega_min, "lowest forcing frequency")->required();
    sw->add_option("--omega-max", sa.omega_max, "highest forcing frequency")->required();
    sw->add_option("--eps-max", sa.eps_max, "largest forcing amplitude")->required();
    sw->add_option("--res-omega", sa.res_omega, "grid points along omega");
    sw->add_option("--res-eps", sa.res_eps, "grid points along eps (including the 0 row)");
    sw->add_option("--steps", sa.steps, "integrator steps per period (default: step rule)");
    sw->add_option("--workers", sa.workers, "parallel workers (default: all cores)");
    sw->add_option("--stab-tol", sa.stab_tol, "instability threshold on the spectral radius");
    sw->add_option("--out", sa.out_file, "output grid CSV")->required();
    sw->add_flag("--full-network", sa.full_network,
                 "force the whole network (P = L) and use the decoupled modal classifier");

    MathieuArgs ma;
    auto* mt = app.add_subcommand("mathieu", "Classify one scalar parametric oscillator");
    mt->add_option("--omega-n", ma.omega_n, "natural frequency")->required();
    mt->add_option("--eps", ma.eps, "forcing amplitude")->required();
    mt->add_option("--omega", ma.omega, "forcing frequency")->required();
    mt->add_option("--steps", ma.steps, "integrator steps per period");

    RingArgs ra;
    auto* ring = app.add_subcommand("ring", "Analytic tongues of an N-node ring");
    ring->add_option("--n", ra.n, "ring size")->required();
    ring->add_option("--forced-edges", ra.forced_edges,
                     "starting nodes of the forced edges (i, i+1 mod N); default 0");
    ring->add_flag("--full", ra.full, "force every ring edge");
    ring->add_option("--out", ra.out_file, "output tongue CSV")->required();

    TorusArgs ta;
    auto* torus = app.add_subcommand("torus", "Analytic tongues of an N^d periodic lattice");
    torus->add_option("--n", ta.n, "nodes per ring")->required();
    torus->add_option("--d", ta.dims, "lattice dimension")->required();
    torus->add_option("--edge-coord", ta.edge_coord, "coordinate of the forced lattice edge");
    torus->add_option("--out", ta.out_file, "output tongue CSV")->required();

    ModesArgs oa;
    auto* modes = app.add_subcommand("modes", "Compare the unstable Floquet mode to the prediction");
    modes->add_option("--graph", oa.graph_file, "network graph file")->required();
    modes->add_option("--forced", oa.forced_file, "forced subnetwork graph file")->required();
    modes->add_option("--omega", oa.omega, "forcing frequency")->required();
    modes->add_option("--eps", oa.eps, "forcing amplitude")->required();
    modes->add_option("--steps", oa.steps, "integrator steps per period");
    modes->add_option("--stab-tol", oa.stab_tol, "instability threshold");
    modes->add_option("--out", oa.out_file, "output mode CSV")->required();

    SpectrumArgs ga;
    auto* spec = app.add_subcommand("spectrum", "Eigenvalues, frequencies and eigenspace groups");
    spec->add_option("--graph", ga.graph_file, "network graph file")->required();
    spec->add_option("--group-tol", ga.group_tol, "eigenspace grouping tolerance");
    spec->add_option("--out", ga.out_file, "output spectrum CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (predict->parsed()) return run_predict(pa);
        if (sw->parsed()) {
            if (!sa.full_network && sa.forced_file.empty()) {
                std::cerr << "sweep: --forced is required unless --full-network is set\n";
                return 2;
            }
            return run_sweep(sa);
        }
        if (mt->parsed()) return run_mathieu(ma);
        if (ring->parsed()) return run_ring(ra);
        if (torus->parsed()) return run_torus(ta);
        if (modes->parsed()) return run_modes(oa);
        if (spec->parsed()) return run_spectrum(ga);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
