#include "parares/matrix.hpp"

#include <cmath>

namespace parares {

Vec matvec(const Matrix& m, const Vec& x) {
    Vec y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Vec matvec(const SymmetricMatrix& m, const Vec& x) {
    const std::size_t n = m.size();
    Vec y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += m(i, k) * x[k];
        y[i] = s;
    }
    return y;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double inf_norm(const Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        if (s > best) best = s;
    }
    return best;
}

double inf_norm(const SymmetricMatrix& m) { return inf_norm(m.dense()); }

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double v : m.values()) s += v * v;
    return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

double norm2(const CVec& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

void scale(Vec& v, double s) {
    for (double& x : v) x *= s;
}

void scale(CVec& v, std::complex<double> s) {
    for (auto& x : v) x *= s;
}

}  // namespace parares
