#pragma once

#include <vector>

#include "parares/spectrum.hpp"
#include "parares/tongue.hpp"

namespace parares {

inline constexpr double kTraceTol = 1e-7;

/// x'' + (omega_n^2 + epsilon cos(omega t)) x = 0.
struct MathieuParams {
    double omega_n = 1.0;
    double epsilon = 0.0;
    double omega = 1.0;
};

struct MathieuResult {
    bool unstable = false;
    double growth_exponent = 0.0;  // 0 when stable
    double trace = 0.0;            // trace of the 2x2 state-transition matrix
};

/// 2x2 monodromy over one forcing period; unstable iff |trace| > 2 +
/// trace_tol (equivalent to spectral radius > 1 for unimodular systems).
/// steps <= 0 selects the default step rule.
MathieuResult mathieu_stability(const MathieuParams& p, int steps = 0);

/// Full-network forcing (P = L) decouples into modal Mathieu equations:
/// tongues at 2 freq_j / order per non-zero group, first-order slope
/// freq_j / 2, higher orders frequency-only.
std::vector<Tongue> full_network_tongues(const Spectrum& s, int max_order);

/// Unstable iff any modal equation x'' + freq_j^2 (1 + eps cos(omega t)) x
/// = 0 is unstable (modal forcing amplitude freq_j^2 * eps).
bool full_network_unstable(const Spectrum& s, double epsilon, double omega, int steps = 0);

/// Largest modal growth exponent (0 when all modes are stable).
double full_network_growth(const Spectrum& s, double epsilon, double omega, int steps = 0);

}  // namespace parares
