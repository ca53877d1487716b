#include "parares/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parares/errors.hpp"
#include "parares/fmt.hpp"

namespace parares {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

void jacobi_eigen(const SymmetricMatrix& m, Vec& eigenvalues, Matrix& vectors, int max_sweeps) {
    const std::size_t n = m.size();
    Matrix a = m.dense();
    Matrix v = Matrix::identity(n);

    const double threshold = 1e-12 * frobenius_norm(a);
    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off > threshold) {
        if (sweep++ >= max_sweeps)
            throw NumericError("jacobi eigensolver did not converge in " +
                               std::to_string(max_sweeps) +
                               " sweeps, off-diagonal residual " + format_sig(off, 6));
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(p, i) = a(i, p);
                    a(i, q) = s * aip + c * aiq;
                    a(q, i) = a(i, q);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }

    // Sort ascending; stable on index to keep the result deterministic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    eigenvalues.assign(n, 0.0);
    vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        eigenvalues[j] = a(src, src);
        // Fix the sign: largest-magnitude component positive.
        std::size_t imax = 0;
        double amax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double av = std::abs(v(i, src));
            if (av > amax) {
                amax = av;
                imax = i;
            }
        }
        const double sign = v(imax, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) vectors(i, j) = sign * v(i, src);
    }
}

Spectrum spectral_decomposition(const SymmetricMatrix& m, double group_tol) {
    Spectrum s;
    jacobi_eigen(m, s.eigenvalues, s.eigenvectors);
    const std::size_t n = s.eigenvalues.size();

    const double lambda_max = n > 0 ? std::max(std::abs(s.eigenvalues.front()),
                                               std::abs(s.eigenvalues.back()))
                                    : 0.0;
    if (group_tol <= 0.0) group_tol = 1e-8 * std::max(1.0, lambda_max);
    const double zero_tol = 1e-9 * std::max(1.0, lambda_max);

    s.group_of.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || s.eigenvalues[i] - s.eigenvalues[i - 1] > group_tol)
            s.groups.emplace_back();
        s.groups.back().push_back(static_cast<int>(i));
        s.group_of[i] = static_cast<int>(s.groups.size()) - 1;
    }

    s.frequencies.assign(n, 0.0);
    for (std::size_t g = 0; g < s.groups.size(); ++g) {
        const double lam = s.eigenvalues[s.groups[g].front()];
        if (std::abs(lam) <= zero_tol) {
            s.zero_group = static_cast<int>(g);
            continue;  // frequency 0
        }
        if (lam < 0.0)
            throw NumericError("negative eigenvalue " + format_sig(lam, 6) +
                               "; input is not positive semi-definite");
        for (int idx : s.groups[g]) s.frequencies[idx] = std::sqrt(s.eigenvalues[idx]);
    }
    return s;
}

Matrix Spectrum::group_basis(int g) const {
    const std::size_t n = size();
    const auto& idx = groups[g];
    Matrix b(n, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = eigenvectors(i, idx[j]);
    return b;
}

std::vector<int> Spectrum::nonzero_groups() const {
    std::vector<int> out;
    for (std::size_t g = 0; g < groups.size(); ++g)
        if (static_cast<int>(g) != zero_group) out.push_back(static_cast<int>(g));
    return out;
}

double Spectrum::max_frequency() const {
    return frequencies.empty() ? 0.0 : *std::max_element(frequencies.begin(), frequencies.end());
}

std::vector<std::pair<int, double>> natural_frequencies(const Spectrum& s) {
    std::vector<std::pair<int, double>> out;
    for (int g : s.nonzero_groups()) out.emplace_back(g, s.group_frequency(g));
    return out;
}

}  // namespace parares
