#include "parares/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "parares/errors.hpp"
#include "parares/fmt.hpp"
#include "parares/mathieu.hpp"
#include "parares/spectrum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parares {

void SweepSpec::validate() const {
    if (laplacian.size() != forcing.size())
        throw NumericError("L and P must have the same dimension");
    if (!(omega_min < omega_max)) throw NumericError("omega range must satisfy min < max");
    if (!(omega_min > 0.0)) throw NumericError("omega range must be positive");
    if (!(eps_max > 0.0)) throw NumericError("eps_max must be > 0");
    if (n_omega < 2 || n_eps < 2) throw NumericError("grid resolution must be >= 2");
}

namespace {

Vec linspace(double lo, double hi, int count) {
    Vec v(count);
    for (int i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return v;
}

GridCell classify_cell(const SweepSpec& spec, const Spectrum* modal, double omega, double eps) {
    GridCell cell;
    if (eps == 0.0) return cell;  // unforced: neutrally stable by construction
    try {
        if (spec.full_network) {
            cell.growth = full_network_growth(*modal, eps, omega, spec.steps_override);
            cell.unstable = cell.growth > 0.0;
        } else {
            ForcedSystem sys{spec.laplacian, spec.forcing, eps, omega};
            const int steps =
                spec.steps_override > 0 ? spec.steps_override : default_steps_per_period(sys);
            const MonodromyResult r = monodromy_result(sys, steps, spec.stab_tol);
            cell.unstable = r.unstable;
            cell.growth = r.unstable ? r.growth_exponent : 0.0;
        }
    } catch (const BlowupError&) {
        cell.growth = std::numeric_limits<double>::infinity();
        cell.unstable = true;
    }
    return cell;
}

StabilityGrid run_sweep(const SweepSpec& spec, int workers, bool parallel) {
    spec.validate();
    StabilityGrid grid;
    grid.omegas = linspace(spec.omega_min, spec.omega_max, spec.n_omega);
    grid.epsilons = linspace(0.0, spec.eps_max, spec.n_eps);
    grid.cells.assign(static_cast<std::size_t>(spec.n_omega) * spec.n_eps, GridCell{});

    Spectrum modal;
    if (spec.full_network) modal = spectral_decomposition(spec.laplacian);

    const long long total = static_cast<long long>(grid.cells.size());
#ifdef _OPENMP
    if (parallel) {
        if (workers <= 0) workers = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (long long idx = 0; idx < total; ++idx) {
            const std::size_t io = static_cast<std::size_t>(idx) / spec.n_eps;
            const std::size_t ie = static_cast<std::size_t>(idx) % spec.n_eps;
            grid.cells[idx] = classify_cell(spec, &modal, grid.omegas[io], grid.epsilons[ie]);
        }
        return grid;
    }
#else
    (void)workers;
    (void)parallel;
#endif
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t io = static_cast<std::size_t>(idx) / spec.n_eps;
        const std::size_t ie = static_cast<std::size_t>(idx) % spec.n_eps;
        grid.cells[idx] = classify_cell(spec, &modal, grid.omegas[io], grid.epsilons[ie]);
    }
    return grid;
}

}  // namespace

StabilityGrid sweep(const SweepSpec& spec, int workers) { return run_sweep(spec, workers, true); }

StabilityGrid sweep_serial(const SweepSpec& spec) { return run_sweep(spec, 1, false); }

std::string export_grid(const StabilityGrid& grid) {
    std::string out = "omega,eps,growth_rate,unstable\n";
    for (std::size_t io = 0; io < grid.omegas.size(); ++io) {
        for (std::size_t ie = 0; ie < grid.epsilons.size(); ++ie) {
            const GridCell& c = grid.at(io, ie);
            out += format_sig(grid.omegas[io]);
            out += ',';
            out += format_sig(grid.epsilons[ie]);
            out += ',';
            out += format_sig(c.growth);
            out += ',';
            out += c.unstable ? "true" : "false";
            out += '\n';
        }
    }
    return out;
}

StabilityGrid parse_grid(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "omega,eps,growth_rate,unstable")
        throw ParseError("bad grid CSV header", 1);
    StabilityGrid grid;
    int lineno = 1;
    std::vector<double> omegas, epsilons;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tok;
        double vals[3];
        for (int f = 0; f < 3; ++f) {
            if (!std::getline(row, tok, ',') || !parse_double(tok, vals[f]))
                throw ParseError("bad numeric field", lineno);
        }
        if (!std::getline(row, tok)) throw ParseError("missing unstable field", lineno);
        GridCell cell;
        cell.growth = vals[2];
        if (tok == "true")
            cell.unstable = true;
        else if (tok == "false")
            cell.unstable = false;
        else
            throw ParseError("bad unstable field '" + tok + "'", lineno);
        if (omegas.empty() || vals[0] != omegas.back()) omegas.push_back(vals[0]);
        if (omegas.size() == 1) epsilons.push_back(vals[1]);
        grid.cells.push_back(cell);
    }
    grid.omegas = omegas;
    grid.epsilons = epsilons;
    if (grid.cells.size() != omegas.size() * epsilons.size())
        throw ParseError("grid CSV is not a full lattice");
    return grid;
}

std::string export_tongue_overlay(const std::vector<Tongue>& tongues, double eps_max) {
    if (!(eps_max > 0.0)) throw NumericError("eps_max must be > 0");
    std::string out = "tongue_id,branch,omega,eps\n";
    for (std::size_t id = 0; id < tongues.size(); ++id) {
        const Tongue& t = tongues[id];
        if (!t.controllable) continue;
        for (const char* branch : {"minus", "plus"}) {
            const double s = branch[0] == 'm' ? -t.slope : t.slope;
            for (double eps : {0.0, eps_max}) {
                out += std::to_string(id);
                out += ',';
                out += branch;
                out += ',';
                out += format_sig(t.omega0 + s * eps);
                out += ',';
                out += format_sig(eps);
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace parares
