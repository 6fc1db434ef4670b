#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "numerics/legendre.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/roots.hpp"
#include "scenario.hpp"

namespace microbot {

using numerics::legendre_pair;

/// One axisymmetric oscillation mode; alpha_n = A cos(tau - gamma), beta_n = B cos(tau - eta).
struct Mode {
    int n = 2;
    double A = 0.0;
    double B = 0.0;
    double gamma = 0.0;
    double eta = 0.0;
};

struct ModeSpectrum {
    std::vector<Mode> modes;
    double epsilon = 0.05;
    double omega = 0.0;        ///< angular frequency [rad/s]
    bool normalized = false;   ///< set by normalize_spectrum

    int n_max() const {
        int m = 0;
        for (const Mode& md : modes) m = std::max(m, md.n);
        return m;
    }
};

/// Position and velocity of the material point labelled by its rest angle.
struct SurfaceState {
    double vartheta = 0.0;   ///< rest polar angle [rad]
    double r = 0.0;          ///< radial position [m]
    double theta = 0.0;      ///< actual polar angle [rad]
    double v_radial = 0.0;   ///< [m/s]
    double v_tangential = 0.0;
};

inline void validate(const ModeSpectrum& spec) {
    std::vector<int> seen;
    for (const Mode& m : spec.modes) {
        if (m.n < 2) throw InvalidParameter("oscillation modes need n >= 2");
        if (m.A < 0.0 || m.B < 0.0) throw InvalidParameter("mode amplitudes must be non-negative");
        if (std::find(seen.begin(), seen.end(), m.n) != seen.end()) {
            throw InvalidParameter("duplicate mode n = " + std::to_string(m.n));
        }
        seen.push_back(m.n);
    }
    detail::require_nonnegative(spec.epsilon, "epsilon");
    detail::require_nonnegative(spec.omega, "omega");
}

/**
 * @brief Near-optimal amplitudes on modes n = k..k+p (unnormalized).
 *
 * A_n = (1+sqrt 2) sin(j psi), B_n = sin(j psi), gamma_n = eta_n = -(pi/2)(j-1),
 * j = n-k+1, psi = pi/(p+2).
 */
inline ModeSpectrum optimal_spectrum(int k, int p, double epsilon = 0.05, double omega = 0.0) {
    if (k < 2) throw InvalidParameter("lowest mode k must be >= 2");
    if (p < 0) throw InvalidParameter("mode count p must be >= 0");
    ModeSpectrum s;
    s.epsilon = epsilon;
    s.omega = omega;
    const double psi = pi / (p + 2.0);
    for (int n = k; n <= k + p; ++n) {
        const int j = n - k + 1;
        const double amp = std::sin(j * psi);
        const double phase = -0.5 * pi * (j - 1);
        s.modes.push_back({n, (1.0 + std::sqrt(2.0)) * amp, amp, phase, phase});
    }
    return s;
}

/// Radial and tangential displacement shapes, sum A e^{i gamma} P_n and sum B e^{i eta} V_n.
inline std::pair<std::complex<double>, std::complex<double>> displacement_phasors(const ModeSpectrum& spec,
                                                                                  double vartheta) {
    const auto t = numerics::legendre_table(std::max(spec.n_max(), 1), std::cos(vartheta));
    std::complex<double> X, Y;
    for (const Mode& m : spec.modes) {
        X += m.A * std::polar(1.0, m.gamma) * t.P[m.n];
        Y += m.B * std::polar(1.0, m.eta) * t.V[m.n];
    }
    return {X, Y};
}

/// Peak over one period of the linearized displacement per unit a*epsilon at rest angle vartheta.
inline double peak_displacement_shape(const ModeSpectrum& spec, double vartheta) {
    const auto [X, Y] = displacement_phasors(spec, vartheta);
    const double m2 = 0.5 * (std::norm(X) + std::norm(Y) + std::abs(X * X + Y * Y));
    return std::sqrt(std::max(0.0, m2));
}

/// Location and size of the largest displacement per unit a*epsilon.
inline numerics::Extremum max_displacement_shape(const ModeSpectrum& spec) {
    const auto& rule = numerics::gauss_legendre(std::max(512, 8 * spec.n_max()));
    std::vector<double> grid{0.0, pi};
    for (double x : rule.x) grid.push_back(std::acos(x));
    std::sort(grid.begin(), grid.end());
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = peak_displacement_shape(spec, grid[i]);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = grid[best == 0 ? 0 : best - 1];
    const double hi = grid[std::min(best + 1, grid.size() - 1)];
    const auto refined = numerics::golden_max([&](double t) { return peak_displacement_shape(spec, t); }, lo, hi,
                                              1e-12);
    if (refined.value > best_val) return refined;
    return {grid[best], best_val};
}

namespace detail {

// Distance of the material point at rest angle vt from its rest position at phase tau, per unit a.
inline double exact_displacement(const ModeSpectrum& spec, const numerics::LegendreTable& tab, double vt,
                                 double tau) {
    double sr = 0.0, st = 0.0;
    for (const Mode& m : spec.modes) {
        sr += m.A * std::cos(tau - m.gamma) * tab.P[m.n];
        st += m.B * std::cos(tau - m.eta) * tab.V[m.n];
    }
    const double r = 1.0 + spec.epsilon * sr, th = vt + spec.epsilon * st;
    return std::hypot(r * std::cos(th) - std::cos(vt), r * std::sin(th) - std::sin(vt));
}

struct DisplacementPeak {
    double vartheta;
    double tau;
    double value;  // per unit a
};

// Grid search over rest angle (Gauss nodes plus poles) and phase, then alternating golden refinement.
inline DisplacementPeak exact_displacement_peak(const ModeSpectrum& spec, int n_theta, int n_t) {
    const int nm = std::max(spec.n_max(), 1);
    const auto& rule = numerics::gauss_legendre(n_theta);
    // poles and equator are symmetry points that an even Gauss grid misses
    std::vector<double> grid{0.0, 0.5 * pi, pi};
    for (double x : rule.x) grid.push_back(std::acos(x));
    std::sort(grid.begin(), grid.end());
    struct Candidate {
        double value;
        std::size_t i;
        int k;
    };
    std::vector<Candidate> cand;
    cand.reserve(grid.size() * n_t);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto tab = numerics::legendre_table(nm, std::cos(grid[i]));
        for (int k = 0; k < n_t; ++k) cand.push_back({exact_displacement(spec, tab, grid[i], 2.0 * pi * k / n_t), i, k});
    }
    // near-equal maxima are common, so polish the best few basins
    const std::size_t n_refine = std::min<std::size_t>(8, cand.size());
    std::partial_sort(cand.begin(), cand.begin() + n_refine, cand.end(),
                      [](const Candidate& l, const Candidate& r) { return l.value > r.value; });
    const double dtau = 2.0 * pi / n_t;
    DisplacementPeak overall{0.0, 0.0, -1.0};
    for (std::size_t c = 0; c < n_refine; ++c) {
        const std::size_t bi = cand[c].i;
        DisplacementPeak best{grid[bi], 2.0 * pi * cand[c].k / n_t, cand[c].value};
        const double lo = grid[bi == 0 ? 0 : bi - 1], hi = grid[std::min(bi + 1, grid.size() - 1)];
        for (int pass = 0; pass < 6; ++pass) {
            const auto tab = numerics::legendre_table(nm, std::cos(best.vartheta));
            const auto t_best = numerics::golden_max(
                [&](double tau) { return exact_displacement(spec, tab, best.vartheta, tau); }, best.tau - dtau,
                best.tau + dtau, 1e-13);
            if (t_best.value > best.value) best = {best.vartheta, t_best.x, t_best.value};
            const auto v_best = numerics::golden_max(
                [&](double vt) {
                    return exact_displacement(spec, numerics::legendre_table(nm, std::cos(vt)), vt, best.tau);
                },
                lo, hi, 1e-13);
            if (v_best.value > best.value) best = {v_best.x, best.tau, v_best.value};
        }
        if (best.value > overall.value) overall = best;
    }
    return overall;
}

}  // namespace detail

/**
 * @brief Rescale amplitudes so the largest material-point displacement is a*epsilon.
 *
 * Starts from the first-order peak, then iterates on the exact displacement
 * of the surface map. With epsilon = 0 the first-order peak is used.
 */
inline ModeSpectrum normalize_spectrum(const ModeSpectrum& spec, double a) {
    detail::require_positive(a, "radius a");
    validate(spec);
    bool any = false;
    for (const Mode& m : spec.modes) any = any || m.A > 0.0 || m.B > 0.0;
    if (!any) throw InvalidParameter("cannot normalize an all-zero spectrum");
    const double peak = max_displacement_shape(spec).value;
    ModeSpectrum out = spec;
    for (Mode& m : out.modes) {
        m.A /= peak;
        m.B /= peak;
    }
    out.normalized = true;
    if (spec.epsilon == 0.0) return out;
    for (int it = 0; it < 20; ++it) {
        const double value = detail::exact_displacement_peak(out, 512, 256).value;
        const double f = spec.epsilon / value;
        for (Mode& m : out.modes) {
            m.A *= f;
            m.B *= f;
        }
        if (std::abs(f - 1.0) < 1e-8) return out;
    }
    throw NumericalError("displacement normalization did not converge");
}

/// Position and velocity of the surface point with rest angle vartheta at time t.
inline SurfaceState surface_state(const ModeSpectrum& spec, double a, double vartheta, double t) {
    const auto tab = numerics::legendre_table(std::max(spec.n_max(), 1), std::cos(vartheta));
    const double tau = spec.omega * t;
    double sr = 0.0, st = 0.0, dsr = 0.0, dst = 0.0;
    for (const Mode& m : spec.modes) {
        sr += m.A * std::cos(tau - m.gamma) * tab.P[m.n];
        st += m.B * std::cos(tau - m.eta) * tab.V[m.n];
        dsr -= m.A * std::sin(tau - m.gamma) * tab.P[m.n];
        dst -= m.B * std::sin(tau - m.eta) * tab.V[m.n];
    }
    const double eps = spec.epsilon, w = spec.omega;
    SurfaceState s;
    s.vartheta = vartheta;
    s.r = a * (1.0 + eps * sr);
    s.theta = vartheta + eps * st;
    s.v_radial = a * eps * w * dsr;
    s.v_tangential = s.r * eps * w * dst;
    return s;
}

/// Largest distance of any material point from its rest position over (vartheta, t), refined locally.
inline double max_material_displacement(const ModeSpectrum& spec, double a, int n_theta = 512, int n_t = 256) {
    detail::require_positive(a, "radius a");
    return a * detail::exact_displacement_peak(spec, n_theta, n_t).value;
}

struct QuasistaticValidity {
    double delta;      ///< viscous damping length [m]
    double womersley;  ///< a sqrt(omega/nu)
};

inline QuasistaticValidity quasistatic_validity(const Scenario& s, double omega) {
    detail::require_positive(omega, "omega");
    return {std::sqrt(2.0 * s.nu / omega), s.a * std::sqrt(omega / s.nu)};
}

/// Dimensionless O(eps^2) coefficients: U = C_U a eps^2 w, P = C_P a^3 eps^2 eta w^2, ...
struct OscillationCoefficients {
    double C_U = 0.0;
    double C_P = 0.0;
    double C_eff = 0.0;
    double C_T = 0.0;
};

namespace detail {

struct ExpansionAverages {
    double U = 0.0;  // per a eps^2 omega
    double P = 0.0;  // per a^3 eps^2 eta omega^2
};

// Period averages of the second-order swimming speed and the power, unit a, omega, eta, eps.
inline ExpansionAverages expansion_averages(const ModeSpectrum& spec, int n_time) {
    const int nm = std::max(spec.n_max(), 1);
    const int nx = 2 * nm + 16;
    const auto& rule = numerics::gauss_legendre(nx);
    std::vector<numerics::LegendreTable> tabs;
    tabs.reserve(nx);
    for (int i = 0; i < nx; ++i) tabs.push_back(numerics::legendre_table(nm, rule.x[i]));

    ExpansionAverages avg;
    std::vector<double> xr(nx), xt(nx), ur(nx), ut(nx), drur(nx), drut(nx), dtur(nx), dtut(nx), pr(nx);
    for (int it = 0; it < n_time; ++it) {
        const double tau = 2.0 * pi * it / n_time;
        std::fill(xr.begin(), xr.end(), 0.0);
        std::fill(xt.begin(), xt.end(), 0.0);
        std::fill(ur.begin(), ur.end(), 0.0);
        std::fill(ut.begin(), ut.end(), 0.0);
        std::fill(drur.begin(), drur.end(), 0.0);
        std::fill(drut.begin(), drut.end(), 0.0);
        std::fill(dtur.begin(), dtur.end(), 0.0);
        std::fill(dtut.begin(), dtut.end(), 0.0);
        std::fill(pr.begin(), pr.end(), 0.0);
        for (const Mode& m : spec.modes) {
            const int n = m.n;
            const double al = m.A * std::cos(tau - m.gamma);
            const double be = m.B * std::cos(tau - m.eta);
            // first-order surface velocity coefficients on P_n and V_n
            const double an = -m.A * std::sin(tau - m.gamma);
            const double bn = -m.B * std::sin(tau - m.eta);
            const double c2 = n * (an + bn) / 2.0;
            const double c1 = an - c2;
            const double f = c1 + c2, fp = -((n + 2.0) * c1 + n * c2);
            const double g = -c1 + (2.0 - n) / n * c2, gp = (n + 2.0) * c1 - (2.0 - n) * c2;
            const double pc = 2.0 * (2.0 * n - 1.0) * c2 / (n + 1.0);
            for (int i = 0; i < nx; ++i) {
                const auto& t = tabs[i];
                xr[i] += al * t.P[n];
                xt[i] += be * t.V[n];
                ur[i] += f * t.P[n];
                ut[i] += g * t.V[n];
                drur[i] += fp * t.P[n];
                drut[i] += gp * t.V[n];
                dtur[i] += f * (n + 1.0) * t.V[n];
                dtut[i] += g * t.dV[n];
                pr[i] += pc * t.P[n];
            }
        }
        double U = 0.0, P = 0.0;
        for (int i = 0; i < nx; ++i) {
            const double x = rule.x[i], s = std::sqrt(1.0 - x * x);
            const double duz_dr = x * drur[i] - s * drut[i];
            const double duz_dt = -s * ur[i] + x * dtur[i] - x * ut[i] - s * dtut[i];
            U += rule.w[i] * (xr[i] * duz_dr + xt[i] * duz_dt);
            const double srr = -pr[i] + 2.0 * drur[i];
            const double srt = drut[i] - ut[i] + dtur[i];
            P += rule.w[i] * (ur[i] * srr + ut[i] * srt);
        }
        avg.U += 0.5 * U;
        avg.P += -2.0 * pi * P;
    }
    avg.U /= n_time;
    avg.P /= n_time;
    return avg;
}

}  // namespace detail

/// Coefficients of the O(eps^2) expansion for a normalized spectrum.
inline OscillationCoefficients oscillation_coefficients(const ModeSpectrum& spec) {
    if (!spec.normalized) throw InvalidState("oscillation performance needs a normalized spectrum");
    validate(spec);
    const auto coarse = detail::expansion_averages(spec, 64);
    const auto fine = detail::expansion_averages(spec, 128);
    const double scale = std::abs(fine.U) + std::abs(fine.P) + 1e-300;
    if (std::abs(fine.U - coarse.U) + std::abs(fine.P - coarse.P) > 1e-9 * scale) {
        throw NumericalError("oscillation expansion changed under time-grid refinement");
    }
    OscillationCoefficients c;
    c.C_U = fine.U;
    c.C_P = fine.P;
    c.C_T = 6.0 * pi * fine.U;
    c.C_eff = fine.P > 0.0 ? 6.0 * pi * fine.U * fine.U / fine.P : 0.0;
    return c;
}

/// Period-averaged speed, power, efficiency and thrust of an oscillating sphere.
inline PerformanceRecord oscillation_performance(const ModeSpectrum& spec, const Scenario& scenario,
                                                 const OscillationCoefficients* cached = nullptr) {
    if (!spec.normalized) throw InvalidState("oscillation performance needs a normalized spectrum");
    if (spec.omega > 0.0) {
        const double wo = quasistatic_validity(scenario, spec.omega).womersley;
        if (wo >= 0.5) {
            throw InvalidParameter("Womersley number " + detail::fmt(wo) + " too large for the quasi-static model");
        }
    }
    const OscillationCoefficients c = cached ? *cached : oscillation_coefficients(spec);
    const double a = scenario.a, eps = spec.epsilon, w = spec.omega, eta = scenario.eta;
    const double U = c.C_U * a * eps * eps * w;
    const double P = c.C_P * a * a * a * eps * eps * eta * w * w;
    PerformanceRecord r;
    r.U = U;
    r.P_propel = P;
    r.thrust = 6.0 * pi * a * eta * U;
    r.efficiency = P > 0.0 ? r.thrust * U / P : 0.0;
    return r;
}

/// Frequency giving mean speed U for a normalized spectrum.
inline double omega_for_speed(const OscillationCoefficients& c, double a, double epsilon, double U) {
    detail::require_positive(epsilon, "epsilon");
    if (c.C_U == 0.0) throw InvalidParameter("spectrum produces no net motion");
    return U / (c.C_U * a * epsilon * epsilon);
}

}  // namespace microbot
