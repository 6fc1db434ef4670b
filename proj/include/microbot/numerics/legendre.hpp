#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "../errors.hpp"

namespace microbot::numerics {

/// Values of P_n, P_n' and V_n = P_n^1/(n+1) at a single abscissa.
///
/// P_n^1 carries the Condon-Shortley phase, so V_n(cos t) = -sin t P_n'(cos t)/(n+1)
/// and dP_n(cos t)/dt = (n+1) V_n.
struct LegendreTable {
    std::vector<double> P;
    std::vector<double> dP;
    std::vector<double> V;
    std::vector<double> dV;  // dV_n(cos t)/dt
};

inline void check_abscissa(double x) {
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("Legendre abscissa outside [-1, 1]: " + microbot::detail::fmt(x));
    }
}

/// Fill the table for degrees 0..n_max at x = cos t.
inline LegendreTable legendre_table(int n_max, double x) {
    check_abscissa(x);
    if (n_max < 0) throw InvalidParameter("Legendre degree must be non-negative");
    LegendreTable t;
    t.P.assign(n_max + 1, 0.0);
    t.dP.assign(n_max + 1, 0.0);
    t.V.assign(n_max + 1, 0.0);
    t.dV.assign(n_max + 1, 0.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    t.P[0] = 1.0;
    if (n_max >= 1) {
        t.P[1] = x;
        t.dP[1] = 1.0;
    }
    for (int n = 2; n <= n_max; ++n) {
        t.P[n] = ((2.0 * n - 1.0) * x * t.P[n - 1] - (n - 1.0) * t.P[n - 2]) / n;
        t.dP[n] = n * t.P[n - 1] + x * t.dP[n - 1];
    }
    for (int n = 0; n <= n_max; ++n) {
        t.V[n] = -s * t.dP[n] / (n + 1.0);
        t.dV[n] = (x * t.dP[n] - n * (n + 1.0) * t.P[n]) / (n + 1.0);
    }
    return t;
}

/// (P_n(x), V_n(x)) by three-term recurrence.
inline std::pair<double, double> legendre_pair(int n, double x) {
    if (n < 0) throw InvalidParameter("Legendre degree must be non-negative");
    const LegendreTable t = legendre_table(n, x);
    return {t.P[n], t.V[n]};
}

/// Squared norm of V_n over [-1, 1].
inline double v_norm2(int n) { return 2.0 * n / ((n + 1.0) * (2.0 * n + 1.0)); }

/// Squared norm of P_n over [-1, 1].
inline double p_norm2(int n) { return 2.0 / (2.0 * n + 1.0); }

}  // namespace microbot::numerics
