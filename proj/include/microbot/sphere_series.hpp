#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numerics/legendre.hpp"

namespace microbot {

/// Velocity, pressure and first derivatives at one point (spherical components).
template <class T>
struct SeriesSample {
    T ur{}, ut{}, p{};
    T dr_ur{}, dr_ut{}, dt_ur{}, dt_ut{};
    int terms = 0;       ///< highest degree summed
    double tail = 0.0;   ///< bound on the last summed term
};

/**
 * @brief Decaying axisymmetric Stokes solution outside a sphere of radius a.
 *
 * Degree n >= 1 with s = a/r:
 *   u_r = P_n (c1 s^{n+2} + c2 s^n)
 *   u_t = V_n (-c1 s^{n+2} + (2-n)/n c2 s^n)
 *   p   = 2 eta (2n-1) c2 s^{n+1} P_n / ((n+1) a)
 * and a source u_r = c0 s^2 at n = 0. T is double or std::complex<double>
 * (complex amplitudes of a time-harmonic field).
 */
template <class T>
struct SphereSeries {
    double a = 1.0;
    T c0{};
    std::vector<T> c1, c2;  // indexed by n, entry 0 unused
    std::vector<double> suffix;  // max over m >= n of (|c1_m| + |c2_m|)(m + 3)
    double omitted = 0.0;        // same measure for degrees beyond n_max (truncated expansions)

    int n_max() const { return static_cast<int>(c1.size()) - 1; }

    void finalize();

    /// Series whose surface velocity is sum a_n P_n e_r + b_n V_n e_theta.
    static SphereSeries from_boundary(double radius, const std::vector<T>& an, const std::vector<T>& bn) {
        SphereSeries s;
        s.a = radius;
        const std::size_t n = std::max(an.size(), bn.size());
        s.c1.assign(std::max<std::size_t>(n, 2), T{});
        s.c2.assign(std::max<std::size_t>(n, 2), T{});
        if (!an.empty()) s.c0 = an[0];
        for (std::size_t k = 1; k < n; ++k) {
            const T ak = k < an.size() ? an[k] : T{};
            const T bk = k < bn.size() ? bn[k] : T{};
            s.c2[k] = static_cast<double>(k) * (ak + bk) / 2.0;
            s.c1[k] = ak - s.c2[k];
        }
        s.finalize();
        return s;
    }
};

inline double coef_abs(double x);
inline double coef_abs(const std::complex<double>& x);

template <class T>
void SphereSeries<T>::finalize() {
    suffix.assign(c1.size() + 1, 0.0);
    suffix.back() = omitted;
    for (int n = n_max(); n >= 1; --n) {
        suffix[n] = std::max(suffix[n + 1], (coef_abs(c1[n]) + coef_abs(c2[n])) * (n + 3.0));
    }
}

/// Magnitude scale of a coefficient.
inline double coef_abs(double x) { return std::abs(x); }
inline double coef_abs(const std::complex<double>& x) { return std::abs(x); }

/**
 * @brief Evaluate the series at (r, theta).
 *
 * Terms are added until the bound on the remaining ones drops below
 * rel_tol times the running scale; running out of coefficients first with
 * a large bound raises NumericalError.
 */
template <class T>
SeriesSample<T> evaluate_series(const SphereSeries<T>& s, double r, double theta, double eta,
                                double rel_tol = 1e-10) {
    if (r < s.a * (1.0 - 1e-12)) throw DomainError("point lies inside the sphere");
    const double q = std::min(1.0, s.a / r);
    const double x = std::cos(theta);
    const double st = std::sin(theta);
    SeriesSample<T> out;
    // source term
    out.ur = s.c0 * q * q;
    out.dr_ur = -2.0 * s.c0 * q * q / r;
    double scale = coef_abs(out.ur);
    if (s.suffix.size() != s.c1.size() + 1) throw InvalidState("sphere series used before finalize()");
    const double coef_scale = std::max(coef_abs(s.c0), s.suffix.size() > 1 ? s.suffix[1] : 0.0);

    // Legendre recurrences run alongside the sum
    double Pm1 = 1.0, P = x, dP = 1.0;
    double qn = q;  // q^n
    for (int n = 1; n <= s.n_max(); ++n) {
        if (n >= 2) {
            const double Pn = ((2.0 * n - 1.0) * x * P - (n - 1.0) * Pm1) / n;
            const double dPn = n * P + x * dP;
            Pm1 = P;
            P = Pn;
            dP = dPn;
            qn *= q;
        }
        const double V = -st * dP / (n + 1.0);
        const double dV = (x * dP - n * (n + 1.0) * P) / (n + 1.0);
        const double dPdt = (n + 1.0) * V;
        const T& A = s.c1[n];
        const T& B = s.c2[n];
        const double q2 = q * q;
        const double dn = n;
        const T fr = A * (qn * q2) + B * qn;                            // radial profile
        const T ft = -A * (qn * q2) + ((2.0 - dn) / dn) * B * qn;       // tangential profile
        const T dfr = (-(dn + 2.0) * A * (qn * q2) - dn * B * qn) / r;  // d/dr
        const T dft = ((dn + 2.0) * A * (qn * q2) - (2.0 - dn) * B * qn) / r;
        out.ur += P * fr;
        out.ut += V * ft;
        out.dr_ur += P * dfr;
        out.dr_ut += V * dft;
        out.dt_ur += dPdt * fr;
        out.dt_ut += dV * ft;
        out.p += (2.0 * eta * (2.0 * dn - 1.0) * (qn * q) * P / ((dn + 1.0) * s.a)) * B;
        out.terms = n;
        scale = std::max(scale, std::max(coef_abs(out.ur), coef_abs(out.ut)));
        // geometric bound on all later terms, including derivative growth
        const double bound = q < 1.0 ? s.suffix[n + 1] * qn * q / (1.0 - q) : 0.0;
        out.tail = bound;
        if (q < 1.0 && (bound == 0.0 || bound <= rel_tol * scale)) break;
    }
    if (q < 1.0 && out.tail > 1e-6 * std::max(scale, 1e-14 * coef_scale)) {
        throw NumericalError("sphere series not converged at r/a = " + detail::fmt(r / s.a) + ": " +
                             std::to_string(out.terms) + " terms, last-term bound " + detail::fmt(out.tail) +
                             " vs scale " + detail::fmt(scale));
    }
    return out;
}

}  // namespace microbot
