#pragma once

#include <utility>
#include <vector>

#include "parares/matrix.hpp"

namespace parares {

/// Eigendecomposition of a symmetric matrix with eigenvalues grouped into
/// (numerically) degenerate eigenspaces. Group ids index `groups` and are
/// ordered by ascending eigenvalue; for a connected Laplacian the zero
/// group is group 0.
struct Spectrum {
    Vec eigenvalues;                      // ascending
    Vec frequencies;                      // sqrt(eigenvalue), 0 for the zero group
    Matrix eigenvectors;                  // orthonormal columns, same order
    std::vector<std::vector<int>> groups; // partition of indices
    std::vector<int> group_of;            // index -> group id
    int zero_group = -1;                  // -1 if no zero eigenvalue

    std::size_t size() const { return eigenvalues.size(); }
    double group_eigenvalue(int g) const { return eigenvalues[groups[g].front()]; }
    double group_frequency(int g) const { return frequencies[groups[g].front()]; }
    int group_dim(int g) const { return static_cast<int>(groups[g].size()); }
    Matrix group_basis(int g) const;      // n x dim, the group's eigenvector columns
    std::vector<int> nonzero_groups() const;
    double max_frequency() const;
};

/// Cyclic Jacobi eigensolver. Eigenvalues sorted ascending; eigenvector
/// signs canonicalized (largest-magnitude component positive). Converges
/// when the off-diagonal Frobenius norm drops below 1e-12 * ||M||_F;
/// throws NumericError with the residual if the sweep budget is exceeded.
void jacobi_eigen(const SymmetricMatrix& m, Vec& eigenvalues, Matrix& vectors,
                  int max_sweeps = 64);

/// Full decomposition with eigenspace grouping by transitive chaining of
/// eigenvalues within group_tol. group_tol <= 0 selects the default
/// 1e-8 * max(1, lambda_max).
Spectrum spectral_decomposition(const SymmetricMatrix& m, double group_tol = -1.0);

/// One (group id, frequency) entry per non-zero eigenspace group.
std::vector<std::pair<int, double>> natural_frequencies(const Spectrum& s);

}  // namespace parares
