#include "parares/floquet.hpp"

#include <cmath>
#include <numbers>

#include "parares/eig.hpp"
#include "parares/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parares {

double ForcedSystem::period() const { return 2.0 * std::numbers::pi / omega; }

void ForcedSystem::validate() const {
    if (laplacian.size() != forcing.size())
        throw NumericError("L and P must have the same dimension");
    if (!(epsilon >= 0.0)) throw NumericError("epsilon must be >= 0");
    if (!(omega > 0.0)) throw NumericError("omega must be > 0");
}

double lambda_max_estimate(const SymmetricMatrix& b) {
    const std::size_t n = b.size();
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i % 5);
    scale(x, 1.0 / norm2(x));
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        Vec y = matvec(b, x);
        const double ny = norm2(y);
        if (ny == 0.0) return 0.0;
        scale(y, 1.0 / ny);
        const double next = dot(y, matvec(b, y));
        const bool done = std::abs(next - lambda) <= 1e-12 * std::max(1.0, std::abs(next));
        lambda = next;
        x = std::move(y);
        if (done) break;
    }
    return std::max(lambda, 0.0);
}

int default_steps_per_period(const ForcedSystem& sys) {
    SymmetricMatrix b = sys.laplacian;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k)
            b.set(i, k, b(i, k) + sys.epsilon * sys.forcing(i, k));
    const double freq_max = std::sqrt(lambda_max_estimate(b));
    const double per_period = 128.0 * (1.0 + freq_max / sys.omega);
    return std::max(256, static_cast<int>(std::ceil(per_period)));
}

namespace {

// d/dt (u, v) = (v, -(L + eps*c*P) u), evaluated into (du, dv).
void deriv(const SymmetricMatrix& l, const SymmetricMatrix& p, double eps_c, const Vec& u,
           const Vec& v, Vec& du, Vec& dv) {
    const std::size_t n = l.size();
    for (std::size_t i = 0; i < n; ++i) {
        du[i] = v[i];
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += l(i, k) * u[k];
        double q = 0.0;
        for (std::size_t k = 0; k < n; ++k) q += p(i, k) * u[k];
        dv[i] = -(s + eps_c * q);
    }
}

struct ColumnBlowup {
    bool hit = false;
    long step = 0;
    double time = 0.0;
};

// Integrates one basis column over a full period. Returns blow-up info
// instead of throwing so that parallel callers can aggregate.
ColumnBlowup integrate_column(const ForcedSystem& sys, int steps, const Vec& cos_full,
                              const Vec& cos_half, std::size_t column, Vec& out) {
    const std::size_t n = sys.nodes();
    const double h = sys.period() / steps;
    const double eps = sys.epsilon;

    Vec u(n, 0.0), v(n, 0.0);
    if (column < n)
        u[column] = 1.0;
    else
        v[column - n] = 1.0;

    Vec du1(n), dv1(n), du2(n), dv2(n), du3(n), dv3(n), du4(n), dv4(n);
    Vec ut(n), vt(n);

    for (int k = 0; k < steps; ++k) {
        deriv(sys.laplacian, sys.forcing, eps * cos_full[k], u, v, du1, dv1);
        for (std::size_t i = 0; i < n; ++i) {
            ut[i] = u[i] + 0.5 * h * du1[i];
            vt[i] = v[i] + 0.5 * h * dv1[i];
        }
        deriv(sys.laplacian, sys.forcing, eps * cos_half[k], ut, vt, du2, dv2);
        for (std::size_t i = 0; i < n; ++i) {
            ut[i] = u[i] + 0.5 * h * du2[i];
            vt[i] = v[i] + 0.5 * h * dv2[i];
        }
        deriv(sys.laplacian, sys.forcing, eps * cos_half[k], ut, vt, du3, dv3);
        for (std::size_t i = 0; i < n; ++i) {
            ut[i] = u[i] + h * du3[i];
            vt[i] = v[i] + h * dv3[i];
        }
        deriv(sys.laplacian, sys.forcing, eps * cos_full[k + 1], ut, vt, du4, dv4);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] += h / 6.0 * (du1[i] + 2.0 * du2[i] + 2.0 * du3[i] + du4[i]);
            v[i] += h / 6.0 * (dv1[i] + 2.0 * dv2[i] + 2.0 * dv3[i] + dv4[i]);
        }
        if ((k + 1) % 64 == 0 || k + 1 == steps) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::isfinite(u[i]) || !std::isfinite(v[i]))
                    return {true, k + 1, (k + 1) * h};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = u[i];
        out[n + i] = v[i];
    }
    return {};
}

}  // namespace

Matrix monodromy(const ForcedSystem& sys, int steps_per_period, int workers) {
    sys.validate();
    if (steps_per_period < 1) throw NumericError("steps_per_period must be positive");
    const std::size_t n = sys.nodes();
    const std::size_t dim = 2 * n;
    const double h = sys.period() / steps_per_period;

    // Shared cosine tables: every column sees identical forcing samples,
    // which keeps parallel and serial integrations bit-identical.
    Vec cos_full(steps_per_period + 1), cos_half(steps_per_period);
    for (int k = 0; k <= steps_per_period; ++k) cos_full[k] = std::cos(sys.omega * (k * h));
    for (int k = 0; k < steps_per_period; ++k)
        cos_half[k] = std::cos(sys.omega * (k * h + 0.5 * h));

    std::vector<Vec> columns(dim, Vec(dim, 0.0));
    std::vector<ColumnBlowup> blowups(dim);

#ifdef _OPENMP
    if (workers < 1) workers = omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long j = 0; j < static_cast<long long>(dim); ++j)
        blowups[j] = integrate_column(sys, steps_per_period, cos_full, cos_half,
                                      static_cast<std::size_t>(j), columns[j]);
#else
    (void)workers;
    for (std::size_t j = 0; j < dim; ++j)
        blowups[j] = integrate_column(sys, steps_per_period, cos_full, cos_half, j, columns[j]);
#endif

    for (std::size_t j = 0; j < dim; ++j)
        if (blowups[j].hit) throw BlowupError(blowups[j].step, blowups[j].time);

    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
    return m;
}

MonodromyResult classify_stability(const Matrix& m, double stab_tol, double period) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw NumericError("monodromy matrix must be square with even dimension");
    MonodromyResult r;
    r.m = m;
    r.eigenvalues = general_eigenvalues(m);

    std::complex<double> dominant{0.0, 0.0};
    int near_unit = 0;
    for (const auto& ev : r.eigenvalues) {
        const double mod = std::abs(ev);
        if (std::abs(ev - std::complex<double>(1.0, 0.0)) <= 1e-6) ++near_unit;
        if (mod > r.spectral_radius ||
            (mod == r.spectral_radius &&
             (ev.real() > dominant.real() ||
              (ev.real() == dominant.real() && ev.imag() > dominant.imag())))) {
            r.spectral_radius = mod;
            dominant = ev;
        }
    }
    r.drift_modes_present = near_unit >= 2;
    r.unstable = r.spectral_radius > 1.0 + stab_tol;
    r.growth_exponent = std::log(r.spectral_radius) / period;
    r.dominant_mode = eigenvector_for(m, dominant, &r.mode_residual);
    return r;
}

MonodromyResult monodromy_result(const ForcedSystem& sys, int steps_per_period, double stab_tol,
                                 int workers) {
    return classify_stability(monodromy(sys, steps_per_period, workers), stab_tol, sys.period());
}

double growth_rate(const ForcedSystem& sys, int steps_per_period, double stab_tol) {
    const MonodromyResult r = monodromy_result(sys, steps_per_period, stab_tol);
    return r.unstable ? r.growth_exponent : 0.0;
}

double symplectic_residual(const Matrix& m) {
    const std::size_t dim = m.rows();
    const std::size_t n = dim / 2;
    // J m
    Matrix jm(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < n; ++i) jm(i, j) = m(n + i, j);
        for (std::size_t i = 0; i < n; ++i) jm(n + i, j) = -m(i, j);
    }
    Matrix r = matmul(m.transposed(), jm);
    for (std::size_t i = 0; i < n; ++i) {
        r(i, n + i) -= 1.0;
        r(n + i, i) += 1.0;
    }
    return inf_norm(r);
}

}  // namespace parares
