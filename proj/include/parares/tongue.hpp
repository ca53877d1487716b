#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parares/matrix.hpp"
#include "parares/spectrum.hpp"

namespace parares {

/// One predicted instability wedge. omega0 = (freq_l + freq_m) / order.
/// slope is the first-order half-width d(omega)/d(eps); it is 0 exactly
/// when controllable is false (filtered resonance or order >= 2, where
/// the first-order analysis provides no width).
struct Tongue {
    double omega0 = 0.0;
    double slope = 0.0;
    int group_l = -1;
    int group_m = -1;
    int order = 1;
    bool controllable = false;
};

struct FrequencyClass {
    enum class Tag { sum_resonant_unstable, difference_resonant_stable, non_resonant_stable };
    Tag tag = Tag::non_resonant_stable;
    std::optional<std::pair<int, int>> witness;  // (group_l, group_m)
};

const char* to_string(FrequencyClass::Tag tag);

double default_ctrl_tol(const SymmetricMatrix& p);  // 1e-9 * ||P||_inf
double default_freq_tol(const Spectrum& s);         // 1e-9 * max(1, freq_max)

/// ||B_m^T P B_l||_2 for explicit orthonormal bases: basis-invariant
/// coupling strength between two eigenspaces through P.
double projected_coupling_norm(const Matrix& basis_m, const SymmetricMatrix& p,
                               const Matrix& basis_l);

/// Same, for two eigenspace groups of a Spectrum.
double coupling_norm(const Spectrum& s, const SymmetricMatrix& p, int group_l, int group_m);

/// One Tongue per unordered pair of non-zero groups (l <= m, l == m
/// included): omega0 = freq_l + freq_m, slope = coupling / (2 sqrt(freq_l
/// freq_m)). Sorted by omega0 ascending, ties by (group_l, group_m).
std::vector<Tongue> predict_first_order_tongues(const Spectrum& s, const SymmetricMatrix& p,
                                                double ctrl_tol);

/// Subharmonic replica frequencies (freq_l + freq_m) / order for orders
/// 2..max_order. No width estimate: slope 0, controllable false.
std::vector<Tongue> predict_higher_order_frequencies(const Spectrum& s, int max_order);

FrequencyClass classify_frequency(const Spectrum& s, const SymmetricMatrix& p, double omega,
                                  double freq_tol, double ctrl_tol);

bool controllability_check(const Spectrum& s, const SymmetricMatrix& p, int group_l, int group_m,
                           double ctrl_tol);

/// Slow-time evolution matrix for a critical frequency pair, and whether
/// its eigenvalues are real (bounded slow dynamics).
struct SlowTimeResult {
    double a11, a12, a21, a22;
    double discriminant;
    bool eigenvalues_real;
};
SlowTimeResult slow_time_matrix(double freq_l, double freq_m, double kappa0, double kappa1,
                                double coupling);

/// Transforms a test-curve slope between the (kappa, eps) and (omega, eps)
/// parameterizations, kappa = 1 / omega^2.
double kappa_to_omega_slope(double omega0, double kappa1);
double omega_slope_to_kappa(double omega0, double slope);

/// CSV: header omega0,slope,order,group_l,group_m,controllable.
std::string tongue_csv(const std::vector<Tongue>& tongues);

}  // namespace parares
