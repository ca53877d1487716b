#include "parares/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parares/errors.hpp"
#include "parares/fmt.hpp"

namespace parares {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_like(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Diagonal similarity scaling by powers of 2 (exact in floating point).
void balance(Matrix& a) {
    const int n = static_cast<int>(a.rows());
    const double radix = 2.0;
    const double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (int j = 0; j < n; ++j) a(i, j) *= g;
                for (int j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Householder similarity reduction to upper Hessenberg form.
void hessenberg(Matrix& a) {
    const int n = static_cast<int>(a.rows());
    Vec v(n, 0.0);
    for (int k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += a(i, k) * a(i, k);
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;
        const double alpha = -sign_like(colnorm, a(k + 1, k));
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // A <- P A with P = I - beta v v^T  (rows k+1..n-1)
        for (int j = k; j < n; ++j) {
            double s = 0.0;
            for (int i = k + 1; i < n; ++i) s += v[i] * a(i, j);
            s *= beta;
            for (int i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
        }
        // A <- A P (columns k+1..n-1)
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            s *= beta;
            for (int j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
        }
        a(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix. Destroys a.
std::vector<std::complex<double>> hqr(Matrix& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<std::complex<double>> wri(n);

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    if (anorm == 0.0) return wri;  // zero matrix

    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        for (;;) {
            for (l = nn; l > 0; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= kEps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) {
                wri[nn--] = x + t;
                break;
            }
            double y = a(nn - 1, nn - 1);
            double w = a(nn, nn - 1) * a(nn - 1, nn);
            if (l == nn - 1) {
                double p = 0.5 * (y - x);
                double q = p * p + w;
                double z = std::sqrt(std::abs(q));
                x += t;
                if (q >= 0.0) {
                    z = p + sign_like(z, p);
                    wri[nn - 1] = wri[nn] = x + z;
                    if (z != 0.0) wri[nn] = x - w / z;
                } else {
                    wri[nn] = std::complex<double>(x + p, -z);
                    wri[nn - 1] = std::conj(wri[nn]);
                }
                nn -= 2;
                break;
            }
            if (its == 30)
                throw NumericError("QR eigenvalue iteration did not converge; residual " +
                                   format_sig(std::abs(a(nn, nn - 1)), 6));
            if (its == 10 || its == 20) {
                t += x;
                for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                y = x = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++its;
            int m;
            double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
            for (m = nn - 2; m >= l; --m) {
                z = a(m, m);
                const double rr = x - z;
                const double ss = y - z;
                p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                q = a(m + 1, m + 1) - z - rr - ss;
                r = a(m + 2, m + 1);
                const double sc = std::abs(p) + std::abs(q) + std::abs(r);
                p /= sc;
                q /= sc;
                r /= sc;
                if (m == l) break;
                const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                                std::abs(a(m + 1, m + 1)));
                if (u <= kEps * v) break;
            }
            for (int i = m; i < nn - 1; ++i) {
                a(i + 2, i) = 0.0;
                if (i != m) a(i + 2, i - 1) = 0.0;
            }
            for (int k = m; k < nn; ++k) {
                if (k != m) {
                    p = a(k, k - 1);
                    q = a(k + 1, k - 1);
                    r = (k + 1 != nn) ? a(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x != 0.0) {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                const double s = sign_like(std::sqrt(p * p + q * q + r * r), p);
                if (s == 0.0) continue;
                if (k == m) {
                    if (l != m) a(k, k - 1) = -a(k, k - 1);
                } else {
                    a(k, k - 1) = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;
                for (int j = k; j <= nn; ++j) {
                    p = a(k, j) + q * a(k + 1, j);
                    if (k + 1 != nn) {
                        p += r * a(k + 2, j);
                        a(k + 2, j) -= p * z;
                    }
                    a(k + 1, j) -= p * y;
                    a(k, j) -= p * x;
                }
                const int mmin = nn < k + 3 ? nn : k + 3;
                for (int i = l; i <= mmin; ++i) {
                    p = x * a(i, k) + y * a(i, k + 1);
                    if (k + 1 != nn) {
                        p += z * a(i, k + 2);
                        a(i, k + 2) -= p * r;
                    }
                    a(i, k + 1) -= p * q;
                    a(i, k) -= p;
                }
            }
        }
    }
    return wri;
}

}  // namespace

std::vector<std::complex<double>> general_eigenvalues(Matrix a) {
    if (a.rows() != a.cols()) throw NumericError("eigenvalues need a square matrix");
    if (a.rows() == 0) return {};
    balance(a);
    hessenberg(a);
    return hqr(a);
}

CVec matvec(const Matrix& a, const CVec& x) {
    CVec y(a.rows(), {0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

namespace {

// Complex LU with partial pivoting; tiny pivots are perturbed so that
// inverse iteration with a (near-)exact eigenvalue shift still solves.
struct ComplexLU {
    std::vector<std::complex<double>> lu;
    std::vector<int> perm;
    std::size_t n = 0;

    ComplexLU(const Matrix& a, std::complex<double> shift) {
        n = a.rows();
        lu.assign(n * n, {0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lu[i * n + j] = a(i, j);
        for (std::size_t i = 0; i < n; ++i) lu[i * n + i] -= shift;
        perm.resize(n);

        double scale = 0.0;
        for (const auto& z : lu) scale = std::max(scale, std::abs(z));
        const double tiny = std::max(scale, 1.0) * kEps * kEps;

        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            double best = std::abs(lu[k * n + k]);
            for (std::size_t i = k + 1; i < n; ++i) {
                const double v = std::abs(lu[i * n + k]);
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
            perm[k] = static_cast<int>(piv);
            if (piv != k)
                for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[piv * n + j]);
            if (std::abs(lu[k * n + k]) < tiny) lu[k * n + k] = tiny;
            const std::complex<double> inv = 1.0 / lu[k * n + k];
            for (std::size_t i = k + 1; i < n; ++i) {
                const std::complex<double> f = lu[i * n + k] * inv;
                lu[i * n + k] = f;
                for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= f * lu[k * n + j];
            }
        }
    }

    CVec solve(CVec b) const {
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(b[k], b[perm[k]]);
            for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu[i * n + k] * b[k];
        }
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) b[i] -= lu[i * n + j] * b[j];
            b[i] /= lu[i * n + i];
        }
        return b;
    }
};

}  // namespace

CVec eigenvector_for(const Matrix& a, std::complex<double> lambda, double* residual_out) {
    const std::size_t n = a.rows();
    ComplexLU lu(a, lambda);

    CVec best;
    double best_res = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < 2 && best_res > 1e-10 * std::max(1.0, inf_norm(a));
         ++attempt) {
        CVec x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = attempt == 0 ? std::complex<double>(1.0, 0.0)
                                : std::complex<double>(1.0 + 0.25 * static_cast<double>(i % 7),
                                                       0.5 * static_cast<double>(i % 3));
        scale(x, 1.0 / norm2(x));
        for (int it = 0; it < 4; ++it) {
            x = lu.solve(x);
            const double nx = norm2(x);
            if (!(nx > 0.0) || !std::isfinite(nx)) break;
            scale(x, 1.0 / nx);
        }
        CVec ax = matvec(a, x);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res += std::norm(ax[i] - lambda * x[i]);
        res = std::sqrt(res);
        if (res < best_res) {
            best_res = res;
            best = x;
        }
    }
    // Canonical phase: largest-modulus component real positive.
    std::size_t imax = 0;
    double amax = -1.0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(best[i]) > amax) {
            amax = std::abs(best[i]);
            imax = i;
        }
    if (amax > 0.0) scale(best, std::conj(best[imax]) / std::abs(best[imax]));
    if (residual_out) *residual_out = best_res;
    return best;
}

double determinant(Matrix a) {
    const std::size_t n = a.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        const double inv = 1.0 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

double spectral_norm(const Matrix& b) {
    const std::size_t rows = b.rows(), cols = b.cols();
    if (rows == 0 || cols == 0) return 0.0;
    if (rows == 1 || cols == 1) {
        double s = 0.0;
        for (double v : b.values()) s += v * v;
        return std::sqrt(s);
    }
    // Gram matrix of the narrower side.
    const Matrix bt = b.transposed();
    const Matrix& tall = cols <= rows ? b : bt;
    const Matrix& wide = cols <= rows ? bt : b;
    Matrix g = matmul(wide, tall);  // cols x cols of the narrower side

    const std::size_t m = g.rows();
    double gnorm = frobenius_norm(g);
    if (gnorm == 0.0) return 0.0;

    // Start from the largest-norm column of g: it always has a component
    // in the dominant eigenspace.
    std::size_t jbest = 0;
    double cbest = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += g(i, j) * g(i, j);
        if (s > cbest) {
            cbest = s;
            jbest = j;
        }
    }
    Vec x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = g(i, jbest);
    scale(x, 1.0 / norm2(x));

    double lambda = 0.0;
    for (int it = 0; it < 100000; ++it) {
        Vec y = matvec(g, x);
        const double ny = norm2(y);
        if (ny == 0.0) return 0.0;
        scale(y, 1.0 / ny);
        const double next = dot(y, matvec(g, y));
        const bool done = std::abs(next - lambda) <= 1e-12 * std::abs(next);
        lambda = next;
        x = std::move(y);
        if (done) break;
    }
    return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace parares
