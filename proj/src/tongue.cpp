#include "parares/tongue.hpp"

#include <algorithm>
#include <cmath>

#include "parares/eig.hpp"
#include "parares/errors.hpp"
#include "parares/fmt.hpp"

namespace parares {

const char* to_string(FrequencyClass::Tag tag) {
    switch (tag) {
        case FrequencyClass::Tag::sum_resonant_unstable: return "sum_resonant_unstable";
        case FrequencyClass::Tag::difference_resonant_stable: return "difference_resonant_stable";
        case FrequencyClass::Tag::non_resonant_stable: return "non_resonant_stable";
    }
    return "?";
}

double default_ctrl_tol(const SymmetricMatrix& p) { return 1e-9 * inf_norm(p); }

double default_freq_tol(const Spectrum& s) { return 1e-9 * std::max(1.0, s.max_frequency()); }

double projected_coupling_norm(const Matrix& basis_m, const SymmetricMatrix& p,
                               const Matrix& basis_l) {
    if (basis_m.rows() != p.size() || basis_l.rows() != p.size())
        throw NumericError("dimension mismatch between bases and forcing matrix");
    const Matrix pb = matmul(p.dense(), basis_l);          // n x dim_l
    const Matrix b = matmul(basis_m.transposed(), pb);     // dim_m x dim_l
    return spectral_norm(b);
}

double coupling_norm(const Spectrum& s, const SymmetricMatrix& p, int group_l, int group_m) {
    if (s.size() != p.size()) throw NumericError("dimension mismatch between spectrum and P");
    // Canonical orientation so that (l,m) and (m,l) run the identical
    // computation and agree bitwise.
    const int lo = std::min(group_l, group_m);
    const int hi = std::max(group_l, group_m);
    return projected_coupling_norm(s.group_basis(hi), p, s.group_basis(lo));
}

std::vector<Tongue> predict_first_order_tongues(const Spectrum& s, const SymmetricMatrix& p,
                                                double ctrl_tol) {
    if (s.size() != p.size()) throw NumericError("dimension mismatch between spectrum and P");
    std::vector<Tongue> out;
    const auto groups = s.nonzero_groups();
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = a; b < groups.size(); ++b) {
            const int gl = groups[a], gm = groups[b];
            const double coupling = coupling_norm(s, p, gl, gm);
            Tongue t;
            t.group_l = gl;
            t.group_m = gm;
            t.order = 1;
            t.omega0 = s.group_frequency(gl) + s.group_frequency(gm);
            t.controllable = coupling > ctrl_tol;
            t.slope = t.controllable
                          ? coupling /
                                (2.0 * std::sqrt(s.group_frequency(gl) * s.group_frequency(gm)))
                          : 0.0;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const Tongue& x, const Tongue& y) {
        if (x.omega0 != y.omega0) return x.omega0 < y.omega0;
        if (x.group_l != y.group_l) return x.group_l < y.group_l;
        return x.group_m < y.group_m;
    });
    return out;
}

std::vector<Tongue> predict_higher_order_frequencies(const Spectrum& s, int max_order) {
    if (max_order < 2) throw NumericError("max_order must be >= 2");
    std::vector<Tongue> out;
    const auto groups = s.nonzero_groups();
    for (int order = 2; order <= max_order; ++order) {
        for (std::size_t a = 0; a < groups.size(); ++a) {
            for (std::size_t b = a; b < groups.size(); ++b) {
                Tongue t;
                t.group_l = groups[a];
                t.group_m = groups[b];
                t.order = order;
                t.omega0 = (s.group_frequency(groups[a]) + s.group_frequency(groups[b])) /
                           static_cast<double>(order);
                t.slope = 0.0;
                t.controllable = false;
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Tongue& x, const Tongue& y) {
        if (x.omega0 != y.omega0) return x.omega0 < y.omega0;
        if (x.order != y.order) return x.order < y.order;
        if (x.group_l != y.group_l) return x.group_l < y.group_l;
        return x.group_m < y.group_m;
    });
    return out;
}

FrequencyClass classify_frequency(const Spectrum& s, const SymmetricMatrix& p, double omega,
                                  double freq_tol, double ctrl_tol) {
    FrequencyClass fc;
    const auto groups = s.nonzero_groups();
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = a; b < groups.size(); ++b) {
            const double sum = s.group_frequency(groups[a]) + s.group_frequency(groups[b]);
            if (std::abs(omega - sum) <= freq_tol &&
                coupling_norm(s, p, groups[a], groups[b]) > ctrl_tol) {
                fc.tag = FrequencyClass::Tag::sum_resonant_unstable;
                fc.witness = {groups[a], groups[b]};
                return fc;
            }
        }
    }
    for (std::size_t a = 0; a < groups.size(); ++a) {
        for (std::size_t b = a + 1; b < groups.size(); ++b) {
            const double diff =
                std::abs(s.group_frequency(groups[b]) - s.group_frequency(groups[a]));
            if (diff > 0.0 && std::abs(omega - diff) <= freq_tol) {
                fc.tag = FrequencyClass::Tag::difference_resonant_stable;
                fc.witness = {groups[a], groups[b]};
                return fc;
            }
        }
    }
    return fc;
}

bool controllability_check(const Spectrum& s, const SymmetricMatrix& p, int group_l, int group_m,
                           double ctrl_tol) {
    return coupling_norm(s, p, group_l, group_m) > ctrl_tol;
}

SlowTimeResult slow_time_matrix(double freq_l, double freq_m, double kappa0, double kappa1,
                                double coupling) {
    SlowTimeResult r;
    r.a11 = kappa1 * freq_l;
    r.a12 = kappa0 * coupling / (2.0 * freq_l);
    r.a21 = -kappa0 * coupling / (2.0 * freq_m);
    r.a22 = -kappa1 * freq_m;
    const double tr = r.a11 + r.a22;
    const double det = r.a11 * r.a22 - r.a12 * r.a21;
    r.discriminant = tr * tr - 4.0 * det;
    r.eigenvalues_real = r.discriminant >= 0.0;
    return r;
}

double kappa_to_omega_slope(double omega0, double kappa1) {
    return -kappa1 * omega0 * omega0 * omega0 / 2.0;
}

double omega_slope_to_kappa(double omega0, double slope) {
    return -2.0 * slope / (omega0 * omega0 * omega0);
}

std::string tongue_csv(const std::vector<Tongue>& tongues) {
    std::string out = "omega0,slope,order,group_l,group_m,controllable\n";
    for (const Tongue& t : tongues) {
        out += format_sig(t.omega0);
        out += ',';
        out += format_sig(t.slope);
        out += ',';
        out += std::to_string(t.order);
        out += ',';
        out += std::to_string(t.group_l);
        out += ',';
        out += std::to_string(t.group_m);
        out += ',';
        out += t.controllable ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace parares
