#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "numerics/quadrature.hpp"
#include "numerics/roots.hpp"
#include "sphere_series.hpp"
#include "sphere_tangential.hpp"
#include "squirmer_modes.hpp"

namespace microbot {

enum class MotionTag { DRAGGED, TANGENTIAL_BAND, OSCILLATING };

/// Fluid velocity and pressure at a point outside the sphere.
struct FlowSample {
    double d = 0.0;       ///< distance from the undistorted surface [m]
    double theta = 0.0;   ///< polar angle [rad]
    double u_r = 0.0;     ///< [m/s]
    double u_theta = 0.0;
    double u_z = 0.0;     ///< axial component
    double u_rho = 0.0;   ///< cylindrical radial component
    double pressure = 0.0;  ///< deviation from ambient [Pa]

    double speed() const { return std::hypot(u_r, u_theta); }
};

enum class ShearDefinition {
    ENVELOPE,          ///< radial derivative of the max-speed envelope
    STRAIN_RATE_NORM,  ///< sqrt(2 e:e) maximized over angle (and phase)
};

struct ShearStress {
    double shear_rate;  ///< [1/s]
    double stress;      ///< [Pa]
};

/**
 * @brief A sphere moving through fluid at rest far away.
 *
 * Built with dragged_mode, band_mode or oscillating_mode; holds the series
 * solution in the frame of the ambient fluid.
 */
class MotionMode {
public:
    MotionTag tag() const { return tag_; }
    const Scenario& scenario() const { return scenario_; }
    const BandActuation& band() const { return band_; }
    const ModeSpectrum& spectrum() const { return spectrum_; }
    double swim_speed() const { return U_; }
    const SphereSeries<double>& steady_series() const { return steady_; }
    const SphereSeries<std::complex<double>>& oscillating_series() const { return osc_; }

    friend MotionMode dragged_mode(const Scenario& s);
    friend MotionMode band_mode(const Scenario& s, const BandActuation& band, int n_terms);
    friend MotionMode oscillating_mode(const Scenario& s, const ModeSpectrum& spec);

private:
    MotionTag tag_ = MotionTag::DRAGGED;
    Scenario scenario_;
    BandActuation band_;
    ModeSpectrum spectrum_;
    double U_ = 0.0;
    SphereSeries<double> steady_;
    SphereSeries<std::complex<double>> osc_;
};

/// Sphere pulled at the scenario speed along +z.
inline MotionMode dragged_mode(const Scenario& s) {
    MotionMode m;
    m.tag_ = MotionTag::DRAGGED;
    m.scenario_ = s;
    m.U_ = s.U;
    m.steady_ = SphereSeries<double>::from_boundary(s.a, {0.0, s.U}, {0.0, 2.0 * s.U});
    return m;
}

/// Projection coefficients b_n of a constant band on V_n, n = 0..n_terms.
inline std::vector<double> band_projection(const BandActuation& band, int n_terms) {
    validate(band);
    const double lo = band.psi(), hi = pi - band.psi();
    const int nq = n_terms + 256;
    const auto& rule = numerics::gauss_legendre(nq);
    std::vector<double> b(n_terms + 1, 0.0);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < nq; ++i) {
        const double th = mid + half * rule.x[i];
        const double w = rule.w[i] * half * std::sin(th) * band.v;
        // V_n via the same recurrence as legendre_table, inlined to keep memory flat
        const double x = std::cos(th), st = std::sin(th);
        double Pm1 = 1.0, P = x, dP = 1.0;
        for (int n = 1; n <= n_terms; ++n) {
            if (n >= 2) {
                const double Pn = ((2.0 * n - 1.0) * x * P - (n - 1.0) * Pm1) / n;
                dP = n * P + x * dP;
                Pm1 = P;
                P = Pn;
            }
            b[n] += w * (-st * dP / (n + 1.0));
        }
    }
    for (int n = 1; n <= n_terms; ++n) b[n] /= numerics::v_norm2(n);
    return b;
}

/// Band squirmer swimming freely at the speed set by its surface motion.
inline MotionMode band_mode(const Scenario& s, const BandActuation& band, int n_terms = 1000) {
    if (band.profile != BandProfile::CONSTANT_MERIDIONAL) {
        throw UnsupportedInput("exterior flow is available for the meridional band only");
    }
    MotionMode m;
    m.tag_ = MotionTag::TANGENTIAL_BAND;
    m.scenario_ = s;
    m.band_ = band;
    std::vector<double> bn = band_projection(band, n_terms);
    const double U = -bn[1] / 3.0;
    std::vector<double> an(n_terms + 1, 0.0);
    an[1] = U;
    bn[1] += 2.0 * U;
    m.U_ = U;
    m.steady_ = SphereSeries<double>::from_boundary(s.a, an, bn);
    const int N = n_terms;
    // coefficients past the cut decay like those just below it
    const double last = std::max(std::abs(bn[N]), std::abs(bn[N - 1]));
    m.steady_.omitted = (N + 1.0) * last * (N + 4.0);
    m.steady_.finalize();
    return m;
}

/// Oscillating sphere; the spectrum must be normalized and carry omega > 0.
inline MotionMode oscillating_mode(const Scenario& s, const ModeSpectrum& spec) {
    if (!spec.normalized) throw InvalidState("oscillating flow needs a normalized spectrum");
    detail::require_positive(spec.omega, "omega");
    MotionMode m;
    m.tag_ = MotionTag::OSCILLATING;
    m.scenario_ = s;
    m.spectrum_ = spec;
    const int nm = spec.n_max();
    std::vector<std::complex<double>> an(nm + 1), bn(nm + 1);
    const std::complex<double> vel(0.0, -s.a * spec.epsilon * spec.omega);  // d/dt of e^{-i w t}
    for (const Mode& md : spec.modes) {
        an[md.n] = vel * md.A * std::polar(1.0, md.gamma);
        bn[md.n] = vel * md.B * std::polar(1.0, md.eta);
    }
    m.U_ = 0.0;  // no first-order translation for n >= 2
    m.osc_ = SphereSeries<std::complex<double>>::from_boundary(s.a, an, bn);
    return m;
}

/// Oscillating mode at the scenario speed with amplitude epsilon, frequency solved from U.
inline MotionMode oscillating_mode_for_speed(const Scenario& s, ModeSpectrum spec) {
    if (!spec.normalized) spec = normalize_spectrum(spec, s.a);
    const auto c = oscillation_coefficients(spec);
    spec.omega = omega_for_speed(c, s.a, spec.epsilon, s.U);
    return oscillating_mode(s, spec);
}

namespace detail {

inline FlowSample make_sample(double d, double theta, double ur, double ut, double p) {
    FlowSample f;
    f.d = d;
    f.theta = theta;
    f.u_r = ur;
    f.u_theta = ut;
    f.u_z = ur * std::cos(theta) - ut * std::sin(theta);
    f.u_rho = ur * std::sin(theta) + ut * std::cos(theta);
    f.pressure = p;
    return f;
}

// Band surface value in the ambient frame, used exactly on r = a.
inline FlowSample band_surface_sample(const MotionMode& m, double theta) {
    const BandActuation& b = m.band();
    const bool in_band = theta >= b.psi() && theta <= pi - b.psi();
    const double U = m.swim_speed();
    const double ur = U * std::cos(theta);
    const double ut = -U * std::sin(theta) + (in_band ? b.v : 0.0);
    return make_sample(0.0, theta, ur, ut, 0.0);
}

inline void check_point(const MotionMode& m, double d) {
    if (d < 0.0) throw DomainError("point lies inside the sphere (d < 0)");
    (void)m;
}

}  // namespace detail

/// Velocity and pressure at distance d from the surface, polar angle theta, time t.
inline FlowSample exterior_flow(const MotionMode& m, double d, double theta, double t = 0.0) {
    detail::check_point(m, d);
    const double a = m.scenario().a, eta = m.scenario().eta;
    const double r = a + d;
    if (m.tag() == MotionTag::OSCILLATING) {
        const auto s = evaluate_series(m.oscillating_series(), r, theta, eta);
        const std::complex<double> ph = std::polar(1.0, -m.spectrum().omega * t);
        return detail::make_sample(d, theta, (s.ur * ph).real(), (s.ut * ph).real(), (s.p * ph).real());
    }
    if (m.tag() == MotionTag::TANGENTIAL_BAND && d == 0.0) return detail::band_surface_sample(m, theta);
    const auto s = evaluate_series(m.steady_series(), r, theta, eta);
    return detail::make_sample(d, theta, s.ur, s.ut, s.p);
}

namespace detail {

// Speed at (d, theta), maximized over the period for the oscillating mode.
inline double envelope_speed(const MotionMode& m, double d, double theta) {
    if (m.tag() != MotionTag::OSCILLATING) return exterior_flow(m, d, theta).speed();
    const auto s = evaluate_series(m.oscillating_series(), m.scenario().a + d, theta, m.scenario().eta);
    const double m2 = 0.5 * (std::norm(s.ur) + std::norm(s.ut) + std::abs(s.ur * s.ur + s.ut * s.ut));
    return std::sqrt(std::max(0.0, m2));
}

inline int angle_samples(const MotionMode& m) {
    return m.tag() == MotionTag::OSCILLATING ? std::max(721, 60 * m.spectrum().n_max() + 1) : 721;
}

}  // namespace detail

/// Largest fluid speed over polar angle (and phase) at distance d from the surface.
inline double max_speed_vs_distance(const MotionMode& m, double d) {
    detail::check_point(m, d);
    if (m.tag() == MotionTag::TANGENTIAL_BAND && d == 0.0) {
        const BandActuation& b = m.band();
        return std::max(m.swim_speed(), std::hypot(m.swim_speed() * std::cos(b.psi()),
                                                   b.v - m.swim_speed() * std::sin(b.psi())) );
    }
    const auto best = numerics::scan_max([&](double th) { return detail::envelope_speed(m, d, th); }, 0.0, pi,
                                         detail::angle_samples(m), 1e-10);
    return best.value;
}

/// Rate-of-strain norm sqrt(2 e:e) from a series sample at radius r.
template <class T>
double strain_rate_norm(const SeriesSample<T>& s, double r, double theta, double phase) {
    auto re = [&](const T& v) {
        if constexpr (std::is_same_v<T, double>) {
            return v;
        } else {
            return (v * std::polar(1.0, -phase)).real();
        }
    };
    const double ur = re(s.ur), ut = re(s.ut);
    const double st = std::max(std::sin(theta), 1e-12);
    const double err = re(s.dr_ur);
    const double ett = re(s.dt_ut) / r + ur / r;
    const double epp = ur / r + ut * std::cos(theta) / (st * r);
    const double ert = 0.5 * (re(s.dr_ut) - ut / r + re(s.dt_ur) / r);
    return std::sqrt(2.0 * (err * err + ett * ett + epp * epp + 2.0 * ert * ert));
}

/// Shear rate at distance d and the viscous stress eta * shear.
inline ShearStress shear_and_stress(const MotionMode& m, double d, double eta,
                                    ShearDefinition def = ShearDefinition::ENVELOPE) {
    if (!(d > 0.0)) throw DomainError("shear needs a point off the surface (d > 0)");
    detail::require_positive(eta, "viscosity eta");
    double shear = 0.0;
    if (def == ShearDefinition::ENVELOPE) {
        const double h = d / 100.0;
        shear = std::abs(max_speed_vs_distance(m, d + h) - max_speed_vs_distance(m, d - h)) / (2.0 * h);
    } else {
        const double r = m.scenario().a + d;
        const int n_phase = m.tag() == MotionTag::OSCILLATING ? 64 : 1;
        for (int k = 0; k < n_phase; ++k) {
            const double phase = 2.0 * pi * k / n_phase;
            auto f = [&](double th) {
                th = std::clamp(th, 1e-6, pi - 1e-6);
                if (m.tag() == MotionTag::OSCILLATING) {
                    return strain_rate_norm(evaluate_series(m.oscillating_series(), r, th, eta), r, th, phase);
                }
                return strain_rate_norm(evaluate_series(m.steady_series(), r, th, eta), r, th, 0.0);
            };
            shear = std::max(shear, numerics::scan_max(f, 0.0, pi, detail::angle_samples(m), 1e-10).value);
        }
    }
    return {shear, eta * shear};
}

/// Least-squares slope of log(max speed) against log(r) on n log-spaced radii in [r_lo, r_hi].
inline double decay_exponent(const MotionMode& m, double r_lo, double r_hi, int n = 16) {
    const double a = m.scenario().a;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = r_lo * std::pow(r_hi / r_lo, i / (n - 1.0));
        const double x = std::log(r), y = std::log(max_speed_vs_distance(m, r - a));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Swimming speed read off the degree-1 far field, (3/2)(R/a)^3 \int u_r P_1 dx at R.
inline double far_field_swim_speed(const MotionMode& m, double R) {
    const double a = m.scenario().a;
    const auto& rule = numerics::gauss_legendre(96);
    double sum = 0.0;
    for (int i = 0; i < 96; ++i) {
        const double th = std::acos(rule.x[i]);
        sum += rule.w[i] * exterior_flow(m, R - a, th).u_r * rule.x[i];
    }
    return 1.5 * sum * std::pow(R / a, 3);
}

}  // namespace microbot
