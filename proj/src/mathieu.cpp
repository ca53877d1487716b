#include "parares/mathieu.hpp"

#include <algorithm>
#include <cmath>

#include "parares/errors.hpp"
#include "parares/floquet.hpp"

namespace parares {

namespace {

ForcedSystem scalar_system(double omega_n, double epsilon, double omega) {
    SymmetricMatrix l(1), p(1);
    l.set(0, 0, omega_n * omega_n);
    p.set(0, 0, 1.0);
    return ForcedSystem{l, p, epsilon, omega};
}

}  // namespace

MathieuResult mathieu_stability(const MathieuParams& p, int steps) {
    if (!(p.omega_n > 0.0)) throw NumericError("omega_n must be > 0");
    const ForcedSystem sys = scalar_system(p.omega_n, p.epsilon, p.omega);
    if (steps <= 0) steps = default_steps_per_period(sys);
    const Matrix m = monodromy(sys, steps);

    MathieuResult r;
    r.trace = m(0, 0) + m(1, 1);
    r.unstable = std::abs(r.trace) > 2.0 + kTraceTol;
    if (r.unstable) {
        const double half = 0.5 * std::abs(r.trace);
        const double rho = half + std::sqrt(half * half - 1.0);
        r.growth_exponent = std::log(rho) / sys.period();
    }
    return r;
}

std::vector<Tongue> full_network_tongues(const Spectrum& s, int max_order) {
    if (max_order < 1) throw NumericError("max_order must be >= 1");
    std::vector<Tongue> out;
    for (const auto& [g, freq] : natural_frequencies(s)) {
        for (int order = 1; order <= max_order; ++order) {
            Tongue t;
            t.group_l = g;
            t.group_m = g;
            t.order = order;
            t.omega0 = 2.0 * freq / order;
            t.controllable = order == 1;
            t.slope = order == 1 ? freq / 2.0 : 0.0;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const Tongue& x, const Tongue& y) {
        if (x.omega0 != y.omega0) return x.omega0 < y.omega0;
        if (x.order != y.order) return x.order < y.order;
        return x.group_l < y.group_l;
    });
    return out;
}

bool full_network_unstable(const Spectrum& s, double epsilon, double omega, int steps) {
    for (const auto& [g, freq] : natural_frequencies(s)) {
        MathieuParams p{freq, freq * freq * epsilon, omega};
        if (mathieu_stability(p, steps).unstable) return true;
    }
    return false;
}

double full_network_growth(const Spectrum& s, double epsilon, double omega, int steps) {
    double growth = 0.0;
    for (const auto& [g, freq] : natural_frequencies(s)) {
        MathieuParams p{freq, freq * freq * epsilon, omega};
        growth = std::max(growth, mathieu_stability(p, steps).growth_exponent);
    }
    return growth;
}

}  // namespace parares
