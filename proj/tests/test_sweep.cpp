#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "parares/errors.hpp"
#include "parares/graph.hpp"
#include "parares/mathieu.hpp"
#include "parares/spectrum.hpp"
#include "parares/sweep.hpp"

using namespace parares;

namespace {

SweepSpec triangle_sweep(double omega_min, double omega_max, double eps_max, int n_omega,
                         int n_eps) {
    SweepSpec spec;
    spec.laplacian = laplacian(fixtures::triangle());
    spec.forcing = edge_laplacian(3, 0, 1);
    spec.omega_min = omega_min;
    spec.omega_max = omega_max;
    spec.eps_max = eps_max;
    spec.n_omega = n_omega;
    spec.n_eps = n_eps;
    return spec;
}

}  // namespace

TEST_CASE("the eps = 0 row is stable across the board") {
    const StabilityGrid g = sweep(triangle_sweep(3.0, 4.0, 0.2, 8, 4));
    CHECK(g.epsilons[0] == 0.0);
    for (std::size_t io = 0; io < g.omegas.size(); ++io) {
        CHECK_FALSE(g.at(io, 0).unstable);
        CHECK(g.at(io, 0).growth == 0.0);
    }
}

TEST_CASE("triangle sweep shows a wedge around the predicted frequency") {
    const double omega0 = 2.0 * std::sqrt(3.0);
    const double slope = 1.0 / std::sqrt(3.0);
    const StabilityGrid g = sweep(triangle_sweep(3.2, 3.7, 0.3, 26, 7));

    for (std::size_t ie = 1; ie < g.epsilons.size(); ++ie) {
        const double eps = g.epsilons[ie];
        for (std::size_t io = 0; io < g.omegas.size(); ++io) {
            const double omega = g.omegas[io];
            // First-order wedge sandwich at modest eps: unstable strictly
            // inside half the predicted width, stable beyond twice it.
            if (eps <= 0.1) {
                if (std::abs(omega - omega0) <= 0.5 * slope * eps)
                    CHECK(g.at(io, ie).unstable);
                if (std::abs(omega - omega0) >= 2.0 * slope * eps)
                    CHECK_FALSE(g.at(io, ie).unstable);
            }
            CHECK(g.at(io, ie).growth >= 0.0);
            CHECK((g.at(io, ie).growth > 0.0) == g.at(io, ie).unstable);
        }
    }
}

TEST_CASE("serial reference and parallel kernel produce identical bytes") {
    const SweepSpec spec = triangle_sweep(3.2, 3.7, 0.25, 10, 5);
    const std::string serial = export_grid(sweep_serial(spec));
    const std::string two = export_grid(sweep(spec, 2));
    const std::string many = export_grid(sweep(spec, 7));
    CHECK(serial == two);
    CHECK(serial == many);
    // And across repeated runs.
    CHECK(export_grid(sweep(spec, 2)) == two);
}

TEST_CASE("grid CSV round trips byte-exactly") {
    const StabilityGrid g = sweep(triangle_sweep(3.3, 3.6, 0.2, 6, 4));
    const std::string csv = export_grid(g);
    CHECK(csv.rfind("omega,eps,growth_rate,unstable\n", 0) == 0);
    const StabilityGrid parsed = parse_grid(csv);
    CHECK(parsed.omegas.size() == g.omegas.size());
    CHECK(parsed.epsilons.size() == g.epsilons.size());
    CHECK(export_grid(parsed) == csv);

    CHECK_THROWS_AS(parse_grid("omega,eps\n"), ParseError);
    CHECK_THROWS_AS(parse_grid("omega,eps,growth_rate,unstable\n1,0,x,false\n"), ParseError);
}

TEST_CASE("a blow-up cell is recorded as inf without poisoning the sweep") {
    SweepSpec spec;
    SymmetricMatrix l(1), p(1);
    l.set(0, 0, 1.0);
    p.set(0, 0, 1.0);
    spec.laplacian = l;
    spec.forcing = p;
    spec.omega_min = 2.0;
    spec.omega_max = 2.2;
    spec.eps_max = 2e6;
    spec.n_omega = 2;
    spec.n_eps = 3;
    const StabilityGrid g = sweep(spec);
    // eps rows: 0, 1e6, 2e6. The forced rows overflow; the unforced row
    // stays clean.
    for (std::size_t io = 0; io < 2; ++io) {
        CHECK(g.at(io, 0).growth == 0.0);
        for (std::size_t ie = 1; ie < 3; ++ie) {
            CHECK(g.at(io, ie).unstable);
            CHECK(std::isinf(g.at(io, ie).growth));
        }
    }
    const std::string csv = export_grid(g);
    CHECK(csv.find(",inf,true") != std::string::npos);
    CHECK(export_grid(parse_grid(csv)) == csv);
}

TEST_CASE("full-network sweep equals the modal classification cell by cell") {
    SweepSpec spec;
    spec.laplacian = laplacian(fixtures::triangle());
    spec.forcing = spec.laplacian;
    spec.omega_min = 1.0;
    spec.omega_max = 4.5;
    spec.eps_max = 0.3;
    spec.n_omega = 12;
    spec.n_eps = 4;
    spec.full_network = true;
    const StabilityGrid g = sweep(spec);
    const Spectrum s = spectral_decomposition(spec.laplacian);
    for (std::size_t io = 0; io < g.omegas.size(); ++io)
        for (std::size_t ie = 0; ie < g.epsilons.size(); ++ie) {
            const bool modal = g.epsilons[ie] > 0.0 &&
                               full_network_unstable(s, g.epsilons[ie], g.omegas[io]);
            CHECK(g.at(io, ie).unstable == modal);
        }
}

TEST_CASE("tongue overlay CSV") {
    std::vector<Tongue> tongues;
    Tongue t;
    t.omega0 = 2.0;
    t.slope = 0.5;
    t.order = 1;
    t.group_l = t.group_m = 1;
    t.controllable = true;
    tongues.push_back(t);
    Tongue blocked = t;
    blocked.slope = 0.0;
    blocked.controllable = false;
    tongues.push_back(blocked);

    const std::string csv = export_tongue_overlay(tongues, 0.2);
    CHECK(csv ==
          "tongue_id,branch,omega,eps\n"
          "0,minus,2,0\n"
          "0,minus,1.9,0.2\n"
          "0,plus,2,0\n"
          "0,plus,2.1,0.2\n");
    CHECK_THROWS_AS(export_tongue_overlay(tongues, 0.0), NumericError);
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec = triangle_sweep(3.0, 3.0, 0.1, 4, 4);
    CHECK_THROWS_AS(sweep(spec), NumericError);
    spec = triangle_sweep(3.0, 4.0, 0.1, 1, 4);
    CHECK_THROWS_AS(sweep(spec), NumericError);
    spec = triangle_sweep(3.0, 4.0, -0.1, 4, 4);
    CHECK_THROWS_AS(sweep(spec), NumericError);
}
