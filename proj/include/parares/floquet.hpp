#pragma once

#include <complex>
#include <vector>

#include "parares/matrix.hpp"

namespace parares {

inline constexpr double kDefaultStabTol = 1e-6;

/// Oscillator network with one periodically modulated sub-Laplacian:
/// phi'' + (L + eps * P * cos(omega t)) phi = 0.
struct ForcedSystem {
    SymmetricMatrix laplacian;
    SymmetricMatrix forcing;
    double epsilon = 0.0;
    double omega = 1.0;

    std::size_t nodes() const { return laplacian.size(); }
    double period() const;
    void validate() const;
};

/// Largest eigenvalue of a PSD matrix by power iteration (used only to
/// set integrator step counts).
double lambda_max_estimate(const SymmetricMatrix& b);

/// max(256, ceil(128 * (1 + freq_max / omega))) with freq_max =
/// sqrt(lambda_max(L + eps P)): at least 128 steps per fastest natural
/// oscillation, never fewer than 256 per forcing period.
int default_steps_per_period(const ForcedSystem& sys);

/// State-transition matrix over one forcing period, integrating all 2n
/// canonical basis columns with classical fixed-step RK4. Column
/// integrations are independent and may run in parallel (workers > 1);
/// the result is bit-identical to the serial computation. Throws
/// BlowupError if the state leaves the finite range.
Matrix monodromy(const ForcedSystem& sys, int steps_per_period, int workers = 1);

struct MonodromyResult {
    Matrix m;
    std::vector<std::complex<double>> eigenvalues;
    double spectral_radius = 0.0;
    double growth_exponent = 0.0;  // ln(spectral_radius) / period
    CVec dominant_mode;            // unit-norm eigenvector of the largest-modulus eigenvalue
    double mode_residual = 0.0;
    bool unstable = false;         // spectral_radius > 1 + stab_tol
    bool drift_modes_present = false;
};

/// Classifies a state-transition matrix. period scales the growth
/// exponent to 1/time units.
MonodromyResult classify_stability(const Matrix& m, double stab_tol, double period);

/// monodromy + classify_stability.
MonodromyResult monodromy_result(const ForcedSystem& sys, int steps_per_period,
                                 double stab_tol = kDefaultStabTol, int workers = 1);

/// Growth exponent of the composed result, clamped to 0 when stable.
double growth_rate(const ForcedSystem& sys, int steps_per_period,
                   double stab_tol = kDefaultStabTol);

/// ||M^T J M - J||_inf with J = [[0, I], [-I, 0]].
double symplectic_residual(const Matrix& m);

}  // namespace parares
