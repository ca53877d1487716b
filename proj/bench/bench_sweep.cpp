// Compares the serial reference sweep against the OpenMP kernel and
// verifies the outputs are byte-identical while timing both.

#include <chrono>
#include <cstdio>
#include <string>

#include "parares/graph.hpp"
#include "parares/lattice.hpp"
#include "parares/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace parares;

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 10;
    SweepSpec spec;
    spec.laplacian = laplacian(ring_graph(n));
    spec.forcing = edge_laplacian(n, 0, 1);
    spec.omega_min = 1.0;
    spec.omega_max = 4.0;
    spec.eps_max = 0.25;
    spec.n_omega = 48;
    spec.n_eps = 10;

    std::printf("ring N=%d, grid %dx%d (%d cells), state dimension %zu\n", n, spec.n_omega,
                spec.n_eps, spec.n_omega * spec.n_eps, 2 * spec.laplacian.size());

    double t0 = now_s();
    const StabilityGrid serial = sweep_serial(spec);
    const double serial_s = now_s() - t0;
    std::printf("serial reference: %8.3f s  (%.1f cells/s)\n", serial_s,
                serial.cells.size() / serial_s);

#ifdef _OPENMP
    const int max_workers = omp_get_max_threads();
#else
    const int max_workers = 1;
#endif
    for (int workers = 1; workers <= max_workers; workers *= 2) {
        t0 = now_s();
        const StabilityGrid parallel = sweep(spec, workers);
        const double par_s = now_s() - t0;
        const bool identical = export_grid(parallel) == export_grid(serial);
        std::printf("openmp %2d worker%s: %8.3f s  (%.1f cells/s, speedup %.2fx, %s)\n", workers,
                    workers == 1 ? " " : "s", par_s, parallel.cells.size() / par_s,
                    serial_s / par_s, identical ? "bytes identical" : "OUTPUT MISMATCH");
        if (!identical) return 1;
    }
    return 0;
}
