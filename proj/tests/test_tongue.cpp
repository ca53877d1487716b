#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "parares/graph.hpp"
#include "parares/spectrum.hpp"
#include "parares/tongue.hpp"

using namespace parares;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

Matrix random_orthogonal(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    Matrix q(n, n);
    for (auto& v : q.values()) v = dist(rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double p = 0.0;
            for (std::size_t i = 0; i < n; ++i) p += q(i, k) * q(i, j);
            for (std::size_t i = 0; i < n; ++i) q(i, j) -= p * q(i, k);
        }
        double nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) nn += q(i, j) * q(i, j);
        nn = std::sqrt(nn);
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= nn;
    }
    return q;
}

}  // namespace

TEST_CASE("single-edge network: tongue at 2 sqrt(2) with slope 1/sqrt(2)") {
    const SymmetricMatrix l = laplacian(fixtures::two_node());
    const Spectrum s = spectral_decomposition(l);
    const auto tongues = predict_first_order_tongues(s, edge_laplacian(2, 0, 1),
                                                     default_ctrl_tol(l));
    REQUIRE(tongues.size() == 1);
    CHECK(tongues[0].omega0 == doctest::Approx(2.0 * kSqrt2).epsilon(1e-13));
    CHECK(tongues[0].slope == doctest::Approx(1.0 / kSqrt2).epsilon(1e-12));
    CHECK(tongues[0].controllable);
    CHECK(tongues[0].order == 1);
}

TEST_CASE("triangle with one forced edge: the degenerate pair gives slope 1/sqrt(3)") {
    const Spectrum s = spectral_decomposition(laplacian(fixtures::triangle()));
    const SymmetricMatrix p = edge_laplacian(3, 0, 1);
    const auto tongues = predict_first_order_tongues(s, p, default_ctrl_tol(p));
    REQUIRE(tongues.size() == 1);
    CHECK(tongues[0].omega0 == doctest::Approx(2.0 * kSqrt3).epsilon(1e-13));
    CHECK(tongues[0].slope == doctest::Approx(1.0 / kSqrt3).epsilon(1e-12));
    CHECK(coupling_norm(s, p, 1, 1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("full-network forcing keeps only diagonal tongues at (2 freq, freq/2)") {
    for (const Graph& g : {fixtures::weighted_triangle(), fixtures::path3(), ring_graph(6)}) {
        const SymmetricMatrix l = laplacian(g);
        const Spectrum s = spectral_decomposition(l);
        const double tol = default_ctrl_tol(l);
        for (const Tongue& t : predict_first_order_tongues(s, l, tol)) {
            if (t.group_l == t.group_m) {
                const double freq = s.group_frequency(t.group_l);
                CHECK(t.controllable);
                CHECK(t.omega0 == doctest::Approx(2.0 * freq).epsilon(1e-12));
                CHECK(t.slope == doctest::Approx(freq / 2.0).epsilon(1e-10));
            } else {
                CHECK_FALSE(t.controllable);
                CHECK(t.slope == 0.0);
            }
        }
    }
}

TEST_CASE("tongue invariants: slope zero iff uncontrollable, frequency identity") {
    const Spectrum s = spectral_decomposition(laplacian(fixtures::path3()));
    const SymmetricMatrix p = edge_laplacian(3, 0, 2);
    auto all = predict_first_order_tongues(s, p, default_ctrl_tol(p));
    auto higher = predict_higher_order_frequencies(s, 3);
    all.insert(all.end(), higher.begin(), higher.end());
    for (const Tongue& t : all) {
        CHECK((t.slope == 0.0) == !t.controllable);
        CHECK(t.slope >= 0.0);
        const double expect =
            (s.group_frequency(t.group_l) + s.group_frequency(t.group_m)) / t.order;
        CHECK(std::abs(t.omega0 - expect) <= 1e-12);
    }
}

TEST_CASE("higher-order frequencies enumerate (sum / order)") {
    const Spectrum two = spectral_decomposition(laplacian(fixtures::two_node()));
    auto h = predict_higher_order_frequencies(two, 2);
    REQUIRE(h.size() == 1);
    CHECK(h[0].omega0 == doctest::Approx(kSqrt2).epsilon(1e-13));
    CHECK(h[0].order == 2);
    CHECK(h[0].slope == 0.0);

    const Spectrum tri = spectral_decomposition(laplacian(fixtures::triangle()));
    h = predict_higher_order_frequencies(tri, 3);
    REQUIRE(h.size() == 2);
    CHECK(h[0].omega0 == doctest::Approx(2.0 * kSqrt3 / 3.0).epsilon(1e-13));
    CHECK(h[1].omega0 == doctest::Approx(kSqrt3).epsilon(1e-13));

    // Frequencies {sqrt(2), 2}: order-2 sums {sqrt(2), (sqrt(2)+2)/2, 2}.
    const Spectrum pair = spectral_decomposition(laplacian(fixtures::two_components()));
    h = predict_higher_order_frequencies(pair, 2);
    REQUIRE(h.size() == 3);
    CHECK(h[0].omega0 == doctest::Approx(kSqrt2).epsilon(1e-13));
    CHECK(h[1].omega0 == doctest::Approx((kSqrt2 + 2.0) / 2.0).epsilon(1e-13));
    CHECK(h[2].omega0 == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("frequency classification") {
    const Spectrum tri = spectral_decomposition(laplacian(fixtures::triangle()));
    const SymmetricMatrix p = edge_laplacian(3, 0, 1);
    const double ftol = default_freq_tol(tri);
    const double ctol = default_ctrl_tol(p);

    auto fc = classify_frequency(tri, p, 2.0 * kSqrt3, ftol, ctol);
    CHECK(fc.tag == FrequencyClass::Tag::sum_resonant_unstable);
    REQUIRE(fc.witness.has_value());
    CHECK(fc.witness->first == 1);
    CHECK(fc.witness->second == 1);

    fc = classify_frequency(tri, p, 1.0, ftol, ctol);
    CHECK(fc.tag == FrequencyClass::Tag::non_resonant_stable);
    CHECK_FALSE(fc.witness.has_value());

    // Frequencies {sqrt(2), 2}: 2 - sqrt(2) is a difference resonance.
    const SymmetricMatrix l2 = laplacian(fixtures::two_components());
    const Spectrum s2 = spectral_decomposition(l2);
    fc = classify_frequency(s2, l2, 2.0 - kSqrt2, default_freq_tol(s2), default_ctrl_tol(l2));
    CHECK(fc.tag == FrequencyClass::Tag::difference_resonant_stable);
    REQUIRE(fc.witness.has_value());

    // An uncontrollable sum (cross pair under P = L) is not flagged unstable.
    fc = classify_frequency(s2, l2, kSqrt2 + 2.0, default_freq_tol(s2), default_ctrl_tol(l2));
    CHECK(fc.tag == FrequencyClass::Tag::non_resonant_stable);
}

TEST_CASE("classification never reports a sum resonance above 2 freq_max") {
    const Spectrum s = spectral_decomposition(laplacian(fixtures::weighted_triangle()));
    const SymmetricMatrix p = edge_laplacian(3, 1, 2);
    const double ftol = default_freq_tol(s);
    const double hi = 2.0 * s.max_frequency() + ftol;
    for (int i = 0; i <= 400; ++i) {
        const double omega = hi * (1.0 + 1e-9) + 0.01 * i;
        CHECK(classify_frequency(s, p, omega, ftol, default_ctrl_tol(p)).tag !=
              FrequencyClass::Tag::sum_resonant_unstable);
    }
}

TEST_CASE("controllability: forcing along a blind direction is filtered") {
    const Spectrum s = spectral_decomposition(laplacian(fixtures::path3()));
    const SymmetricMatrix p = edge_laplacian(3, 0, 2);
    const double tol = default_ctrl_tol(p);
    // e_02 is proportional to the frequency-1 eigenvector, so only the
    // diagonal pair (1,1) couples.
    CHECK(controllability_check(s, p, 1, 1, tol));
    CHECK_FALSE(controllability_check(s, p, 1, 2, tol));
    CHECK_FALSE(controllability_check(s, p, 2, 2, tol));

    // P = L: cross pairs always filtered.
    const SymmetricMatrix l = laplacian(fixtures::path3());
    CHECK_FALSE(controllability_check(s, l, 1, 2, default_ctrl_tol(l)));

    const Spectrum tri = spectral_decomposition(laplacian(fixtures::triangle()));
    const SymmetricMatrix e01 = edge_laplacian(3, 0, 1);
    CHECK(controllability_check(tri, e01, 1, 1, default_ctrl_tol(e01)));
}

TEST_CASE("slope symmetry and basis invariance") {
    const Spectrum s = spectral_decomposition(laplacian(ring_graph(8)));
    const SymmetricMatrix p = edge_laplacian(8, 2, 3);
    for (int gl = 1; gl < static_cast<int>(s.groups.size()); ++gl)
        for (int gm = gl; gm < static_cast<int>(s.groups.size()); ++gm)
            CHECK(coupling_norm(s, p, gl, gm) == coupling_norm(s, p, gm, gl));

    // Rotating any degenerate basis by a random orthogonal matrix must not
    // change the coupling norms.
    const Matrix basis = s.group_basis(1);  // 2-dimensional pair
    REQUIRE(basis.cols() == 2);
    for (unsigned seed : {11u, 12u, 13u}) {
        const Matrix q = random_orthogonal(2, seed);
        const Matrix rotated = matmul(basis, q);
        for (int gm = 1; gm < static_cast<int>(s.groups.size()); ++gm) {
            const double a = projected_coupling_norm(s.group_basis(gm), p, basis);
            const double b = projected_coupling_norm(s.group_basis(gm), p, rotated);
            CHECK(std::abs(a - b) <= 1e-10);
        }
    }
}

TEST_CASE("singleton groups reduce the 2-norm to a plain inner product") {
    const SymmetricMatrix l = laplacian(fixtures::weighted_triangle());
    const Spectrum s = spectral_decomposition(l);
    REQUIRE(s.groups.size() == 3);  // all singletons
    const SymmetricMatrix p = edge_laplacian(3, 1, 2);
    for (int gl = 1; gl <= 2; ++gl)
        for (int gm = gl; gm <= 2; ++gm) {
            Vec vl(3), vm(3);
            for (int i = 0; i < 3; ++i) {
                vl[i] = s.eigenvectors(i, s.groups[gl][0]);
                vm[i] = s.eigenvectors(i, s.groups[gm][0]);
            }
            const double inner = std::abs(dot(vm, matvec(p, vl)));
            CHECK(coupling_norm(s, p, gl, gm) == doctest::Approx(inner).epsilon(1e-13));
        }
}

TEST_CASE("slow-time matrix discriminant classification") {
    // Decoupled: diagonal matrix, real eigenvalues.
    auto r = slow_time_matrix(1.3, 0.8, 0.4, 0.5, 0.0);
    CHECK(r.eigenvalues_real);

    // No detuning against nonzero coupling: purely imaginary pair.
    r = slow_time_matrix(1.3, 0.8, 0.4, 0.0, 0.7);
    CHECK_FALSE(r.eigenvalues_real);

    // Exact threshold with power-of-two data: discriminant is exactly 0.
    // freq_l = freq_m = 1, kappa0 = 1/4 (critical for omega0 = 2),
    // coupling 1: threshold kappa1 = kappa0^{3/2} = 1/8.
    r = slow_time_matrix(1.0, 1.0, 0.25, 0.125, 1.0);
    CHECK(r.discriminant == 0.0);
    CHECK(r.eigenvalues_real);
    r = slow_time_matrix(1.0, 1.0, 0.25, 0.1249, 1.0);
    CHECK_FALSE(r.eigenvalues_real);
    r = slow_time_matrix(1.0, 1.0, 0.25, 0.1251, 1.0);
    CHECK(r.eigenvalues_real);
}

TEST_CASE("kappa/omega slope transformation round trips") {
    CHECK(kappa_to_omega_slope(1.0, -2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kappa_to_omega_slope(2.0, 0.0) == 0.0);

    const double omega0 = 2.0 * kSqrt3;
    const double slope = 0.5774;
    const double back = kappa_to_omega_slope(omega0, omega_slope_to_kappa(omega0, slope));
    CHECK(std::abs(back - slope) <= 1e-12);
    for (double a : {1e-6, 0.3, 7.0}) {
        const double rt = kappa_to_omega_slope(1.7, omega_slope_to_kappa(1.7, a));
        CHECK(std::abs(rt - a) <= 1e-14 * std::max(1.0, a));
    }
}

TEST_CASE("tongue CSV format") {
    const Spectrum s = spectral_decomposition(laplacian(fixtures::triangle()));
    const SymmetricMatrix p = edge_laplacian(3, 0, 1);
    const auto tongues = predict_first_order_tongues(s, p, default_ctrl_tol(p));
    const std::string csv = tongue_csv(tongues);
    CHECK(csv.substr(0, csv.find('\n')) == "omega0,slope,order,group_l,group_m,controllable");
    CHECK(csv.find("3.46410161514") != std::string::npos);  // 2 sqrt(3), 12 digits
    CHECK(csv.find(",true") != std::string::npos);
}
