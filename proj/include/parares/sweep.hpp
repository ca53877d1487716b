#pragma once

#include <string>
#include <vector>

#include "parares/floquet.hpp"
#include "parares/matrix.hpp"
#include "parares/tongue.hpp"

namespace parares {

/// (omega, eps) rectangle to classify. Axes are uniform inclusive
/// lattices; the eps axis starts at 0 (self-check row). full_network
/// switches the per-cell classifier from the 2n-dimensional Floquet
/// computation to the decoupled per-mode Mathieu union (P = L).
struct SweepSpec {
    SymmetricMatrix laplacian;
    SymmetricMatrix forcing;
    double omega_min = 0.0;
    double omega_max = 0.0;
    double eps_max = 0.0;
    int n_omega = 2;
    int n_eps = 2;
    int steps_override = 0;  // 0: per-cell default step rule
    double stab_tol = kDefaultStabTol;
    bool full_network = false;

    void validate() const;
};

struct GridCell {
    double growth = 0.0;  // >= 0; +inf marks a blow-up cell
    bool unstable = false;
};

struct StabilityGrid {
    Vec omegas;
    Vec epsilons;
    std::vector<GridCell> cells;  // omega-major: index = io * n_eps + ie

    const GridCell& at(std::size_t io, std::size_t ie) const {
        return cells[io * epsilons.size() + ie];
    }
};

/// Classifies every cell. workers <= 0 uses all available threads; the
/// result is byte-identical for any worker count. A blow-up in one cell
/// is recorded as growth = inf without aborting the sweep.
StabilityGrid sweep(const SweepSpec& spec, int workers = 0);

/// Plain serial loop, kept as the reference implementation the parallel
/// kernel is checked against.
StabilityGrid sweep_serial(const SweepSpec& spec);

/// CSV with header omega,eps,growth_rate,unstable; one row per cell in
/// omega-major order, 12 significant digits, inf sentinel allowed.
std::string export_grid(const StabilityGrid& grid);
StabilityGrid parse_grid(const std::string& csv);

/// First-order wedge boundaries omega = omega0 +- slope * eps for every
/// controllable tongue, sampled at eps in {0, eps_max}. Header
/// tongue_id,branch,omega,eps.
std::string export_tongue_overlay(const std::vector<Tongue>& tongues, double eps_max);

}  // namespace parares
