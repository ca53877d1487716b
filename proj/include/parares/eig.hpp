#pragma once

#include <complex>
#include <vector>

#include "parares/matrix.hpp"

namespace parares {

/// All eigenvalues of a dense real matrix: balancing, Householder
/// reduction to Hessenberg form, then Francis double-shift QR.
/// Throws NumericError on non-convergence.
std::vector<std::complex<double>> general_eigenvalues(Matrix a);

/// Unit-norm eigenvector for the given eigenvalue of a real matrix,
/// by inverse iteration with a complex shift. residual_out (optional)
/// receives ||A x - lambda x||_2.
CVec eigenvector_for(const Matrix& a, std::complex<double> lambda,
                     double* residual_out = nullptr);

/// Determinant via LU with partial pivoting.
double determinant(Matrix a);

/// 2-induced norm (largest singular value). Closed form when either
/// dimension is 1, otherwise power iteration on the smaller Gram matrix
/// with 1e-12 relative convergence.
double spectral_norm(const Matrix& b);

/// y = A x for real A, complex x.
CVec matvec(const Matrix& a, const CVec& x);

}  // namespace parares
