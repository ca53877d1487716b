#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace parares {

using Vec = std::vector<double>;
using CVec = std::vector<std::complex<double>>;

/// Dense real matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const Vec& values() const { return a_; }
    Vec& values() { return a_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

/// Dense real symmetric matrix. Mutators write both triangles, so
/// entries (i,k) and (k,i) are always bitwise equal.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t k) const { return a_[i * n_ + k]; }

    void set(std::size_t i, std::size_t k, double v) {
        a_[i * n_ + k] = v;
        a_[k * n_ + i] = v;
    }
    void add(std::size_t i, std::size_t k, double v) {
        a_[i * n_ + k] += v;
        if (i != k) a_[k * n_ + i] = a_[i * n_ + k];
    }

    const Vec& values() const { return a_; }

    Matrix dense() const {
        Matrix m(n_, n_);
        m.values() = a_;
        return m;
    }

private:
    std::size_t n_ = 0;
    Vec a_;
};

// y = m x
Vec matvec(const Matrix& m, const Vec& x);
Vec matvec(const SymmetricMatrix& m, const Vec& x);

Matrix matmul(const Matrix& a, const Matrix& b);

// Max absolute row sum.
double inf_norm(const Matrix& m);
double inf_norm(const SymmetricMatrix& m);
double frobenius_norm(const Matrix& m);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);
double norm2(const CVec& v);
void scale(Vec& v, double s);
void scale(CVec& v, std::complex<double> s);

}  // namespace parares
