#include "parares/modes.hpp"

#include <cmath>

#include "parares/errors.hpp"
#include "parares/fmt.hpp"

namespace parares {

Matrix predicted_mode_span(const Spectrum& s, const Tongue& t) {
    if (t.group_l < 0 || t.group_m < 0 || t.group_l >= static_cast<int>(s.groups.size()) ||
        t.group_m >= static_cast<int>(s.groups.size()))
        throw NumericError("unknown group id in tongue");
    const Matrix bl = s.group_basis(t.group_l);
    const std::size_t n = bl.rows();
    const bool same = t.group_l == t.group_m;
    const Matrix bm = same ? Matrix() : s.group_basis(t.group_m);
    Matrix b(n, bl.cols() + (same ? 0 : bm.cols()));
    for (std::size_t j = 0; j < bl.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = bl(i, j);
    if (!same)
        for (std::size_t j = 0; j < bm.cols(); ++j)
            for (std::size_t i = 0; i < n; ++i) b(i, bl.cols() + j) = bm(i, j);

    // Modified Gram-Schmidt; the columns are already orthonormal for
    // distinct eigenvalues, so this only cleans up rounding.
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double proj = 0.0;
            for (std::size_t i = 0; i < n; ++i) proj += b(i, k) * b(i, j);
            for (std::size_t i = 0; i < n; ++i) b(i, j) -= proj * b(i, k);
        }
        double nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) nn += b(i, j) * b(i, j);
        nn = std::sqrt(nn);
        if (nn == 0.0) throw NumericError("degenerate predicted span");
        for (std::size_t i = 0; i < n; ++i) b(i, j) /= nn;
    }
    return b;
}

double subspace_alignment(const CVec& mode, const Matrix& basis) {
    if (mode.size() != basis.rows()) throw NumericError("mode/basis dimension mismatch");
    double total = 0.0;
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::complex<double> c{0.0, 0.0};
        for (std::size_t i = 0; i < mode.size(); ++i) c += basis(i, j) * mode[i];
        total += std::norm(c);
    }
    return std::sqrt(total);
}

ModeReport mode_report(const ForcedSystem& sys, const Spectrum& s, const Tongue& t, int steps,
                       double stab_tol) {
    const MonodromyResult r = monodromy_result(sys, steps, stab_tol);
    if (!r.unstable) throw NumericError("stable point: no unstable mode to report");
    const std::size_t n = sys.nodes();

    ModeReport rep;
    rep.tongue = t;
    rep.numerical_mode.assign(r.dominant_mode.begin(), r.dominant_mode.begin() + n);
    const double nn = norm2(rep.numerical_mode);
    if (nn == 0.0) throw NumericError("dominant mode has no position component");
    scale(rep.numerical_mode, 1.0 / nn);
    rep.predicted_basis = predicted_mode_span(s, t);
    rep.alignment = subspace_alignment(rep.numerical_mode, rep.predicted_basis);
    return rep;
}

std::string mode_report_csv(const ModeReport& report) {
    const Matrix& b = report.predicted_basis;
    const std::size_t n = report.numerical_mode.size();
    // Projection of the numerical mode onto the predicted span.
    CVec proj(n, {0.0, 0.0});
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::complex<double> c{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) c += b(i, j) * report.numerical_mode[i];
        for (std::size_t i = 0; i < n; ++i) proj[i] += c * b(i, j);
    }
    std::string out = "node,re(mode),im(mode),re(proj),im(proj)\n";
    for (std::size_t i = 0; i < n; ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_sig(report.numerical_mode[i].real());
        out += ',';
        out += format_sig(report.numerical_mode[i].imag());
        out += ',';
        out += format_sig(proj[i].real());
        out += ',';
        out += format_sig(proj[i].imag());
        out += '\n';
    }
    out += "alignment=" + format_sig(report.alignment) + "\n";
    return out;
}

}  // namespace parares
