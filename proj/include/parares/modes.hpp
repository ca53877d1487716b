#pragma once

#include <string>

#include "parares/floquet.hpp"
#include "parares/matrix.hpp"
#include "parares/spectrum.hpp"
#include "parares/tongue.hpp"

namespace parares {

/// Orthonormal basis of span{V_l, V_m} for the tongue's group pair
/// (re-orthonormalized; a no-op for distinct eigenvalues).
Matrix predicted_mode_span(const Spectrum& s, const Tongue& t);

/// ||B B* x||_2 for a unit-norm complex vector x and an orthonormal real
/// basis B; 1 when x lies in the span, 0 when orthogonal to it.
double subspace_alignment(const CVec& mode, const Matrix& basis);

struct ModeReport {
    Tongue tongue;
    CVec numerical_mode;     // position part of the dominant Floquet mode, unit norm
    Matrix predicted_basis;
    double alignment = 0.0;
};

/// Runs the Floquet computation at (omega, eps), extracts the position
/// part of the dominant eigenvector and projects it onto the predicted
/// span. Throws NumericError when the point is stable.
ModeReport mode_report(const ForcedSystem& sys, const Spectrum& s, const Tongue& t, int steps,
                       double stab_tol = kDefaultStabTol);

/// CSV node,re(mode),im(mode),re(proj),im(proj) plus a final
/// "alignment=..." summary line.
std::string mode_report_csv(const ModeReport& report);

}  // namespace parares
