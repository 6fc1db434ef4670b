#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "numerics/quadrature.hpp"
#include "scenario.hpp"

namespace microbot {

using Vec3 = std::array<double, 3>;

/// Tangential surface velocity (u_theta, u_phi) on a sphere.
struct SurfaceVelocityField {
    std::function<std::array<double, 2>(double theta, double phi)> evaluate;
    bool axisymmetric = true;
    /// Polar angles where the field may jump; quadrature is split there.
    std::vector<double> theta_breaks;
};

enum class BandProfile { CONSTANT_MERIDIONAL, COS_PHI_ROTATION };

/// Equatorial band of angular width gamma moving at speed v.
struct BandActuation {
    double gamma = pi / 3.0;
    double v = 0.0;
    BandProfile profile = BandProfile::CONSTANT_MERIDIONAL;

    /// Polar angle of the northern band edge, (pi - gamma)/2.
    double psi() const { return 0.5 * (pi - gamma); }
};

inline void validate(const BandActuation& band) {
    if (!(band.gamma > 0.0 && band.gamma <= pi)) throw InvalidParameter("band angle gamma must lie in (0, pi]");
    detail::require_nonnegative(band.v, "band speed v");
}

/// Surface field of a band actuation.
inline SurfaceVelocityField band_field(const BandActuation& band) {
    validate(band);
    const double lo = band.psi(), hi = pi - band.psi();
    SurfaceVelocityField f;
    f.axisymmetric = band.profile == BandProfile::CONSTANT_MERIDIONAL;
    f.theta_breaks = {lo, hi};
    const double v = band.v;
    if (f.axisymmetric) {
        f.evaluate = [=](double theta, double) -> std::array<double, 2> {
            return {(theta >= lo && theta <= hi) ? v : 0.0, 0.0};
        };
    } else {
        f.evaluate = [=](double theta, double phi) -> std::array<double, 2> {
            return {(theta >= lo && theta <= hi) ? v * std::cos(phi) : 0.0, 0.0};
        };
    }
    return f;
}

/// Meridional field u = v sin(theta), the most efficient tangential squirmer.
inline SurfaceVelocityField sin_theta_field(double v) {
    SurfaceVelocityField f;
    f.evaluate = [v](double theta, double) -> std::array<double, 2> { return {v * std::sin(theta), 0.0}; };
    return f;
}

namespace detail {

struct SphereQuadrature {
    int n_theta = 64;  // Gauss nodes per theta segment
    int n_phi = 128;   // trapezoid nodes
};

// Sum of g(theta, phi, n_hat, theta_hat, phi_hat) * dOmega over the unit sphere.
template <class G>
Vec3 sphere_integral(const SurfaceVelocityField& field, SphereQuadrature q, G&& g) {
    std::vector<double> breaks{0.0};
    for (double b : field.theta_breaks)
        if (b > 0.0 && b < pi) breaks.push_back(b);
    breaks.push_back(pi);
    std::sort(breaks.begin(), breaks.end());
    Vec3 sum{0.0, 0.0, 0.0};
    const auto& rule = numerics::gauss_legendre(q.n_theta);
    const int n_phi = field.axisymmetric ? 1 : q.n_phi;
    const double dphi = 2.0 * pi / n_phi;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        // Gauss in theta keeps sin(theta) factors smooth at the poles
        const double t_lo = breaks[s], t_hi = breaks[s + 1];
        if (!(t_hi > t_lo)) continue;
        const double mid = 0.5 * (t_lo + t_hi), half = 0.5 * (t_hi - t_lo);
        for (int i = 0; i < q.n_theta; ++i) {
            const double theta = mid + half * rule.x[i];
            const double x = std::cos(theta), st = std::sin(theta);
            for (int k = 0; k < n_phi; ++k) {
                const double phi = k * dphi;
                const Vec3 n{st * std::cos(phi), st * std::sin(phi), x};
                const Vec3 th{x * std::cos(phi), x * std::sin(phi), -st};
                const Vec3 ph{-std::sin(phi), std::cos(phi), 0.0};
                const Vec3 val = g(theta, phi, n, th, ph);
                const double w = rule.w[i] * half * st * (field.axisymmetric ? 2.0 * pi : dphi);
                // azimuthal average of a phi-independent field keeps only the axial part
                for (int c = field.axisymmetric ? 2 : 0; c < 3; ++c) sum[c] += w * val[c];
            }
        }
    }
    return sum;
}

template <class G>
Vec3 refined_sphere_integral(const SurfaceVelocityField& field, G&& g) {
    const Vec3 coarse = sphere_integral(field, {64, 128}, g);
    const Vec3 fine = sphere_integral(field, {128, 256}, g);
    double scale = 0.0, diff = 0.0;
    for (int c = 0; c < 3; ++c) {
        scale = std::max(scale, std::abs(fine[c]));
        diff = std::max(diff, std::abs(fine[c] - coarse[c]));
    }
    if (diff > 1e-10 * scale && diff > 1e-300) {
        throw NumericalError("surface quadrature did not converge: change " + detail::fmt(diff / scale) +
                             " between refinement levels");
    }
    return fine;
}

}  // namespace detail

/**
 * @brief Swimming velocity of a sphere with tangential surface motion.
 *
 * U = -(1/4 pi a^2) \oint u dS, reported in the body frame with +z the
 * propulsion axis.
 */
inline Vec3 locomotion_velocity(const SurfaceVelocityField& field, double a) {
    detail::require_positive(a, "radius a");
    Vec3 s = detail::refined_sphere_integral(field, [&](double th, double ph, const Vec3&, const Vec3& et,
                                                        const Vec3& ep) {
        const auto u = field.evaluate(th, ph);
        return Vec3{u[0] * et[0] + u[1] * ep[0], u[0] * et[1] + u[1] * ep[1], u[0] * et[2] + u[1] * ep[2]};
    });
    for (double& c : s) c *= -1.0 / (4.0 * pi);
    return s;
}

/// Rotation rate, Omega = -(3/8 pi a^3) \oint n x u dS.
inline Vec3 angular_velocity(const SurfaceVelocityField& field, double a) {
    detail::require_positive(a, "radius a");
    Vec3 s = detail::refined_sphere_integral(field, [&](double th, double ph, const Vec3& n, const Vec3& et,
                                                        const Vec3& ep) {
        const auto u = field.evaluate(th, ph);
        const Vec3 w{u[0] * et[0] + u[1] * ep[0], u[0] * et[1] + u[1] * ep[1], u[0] * et[2] + u[1] * ep[2]};
        return Vec3{n[1] * w[2] - n[2] * w[1], n[2] * w[0] - n[0] * w[2], n[0] * w[1] - n[1] * w[0]};
    });
    for (double& c : s) c *= -3.0 / (8.0 * pi * a);
    return s;
}

/// Power (2 eta / a) \oint |u|^2 dS for an axisymmetric tangential field.
inline double propulsion_power(const SurfaceVelocityField& field, double a, double eta) {
    detail::require_positive(a, "radius a");
    detail::require_positive(eta, "viscosity eta");
    if (!field.axisymmetric) {
        throw UnsupportedInput("surface-power formula holds for axisymmetric fields only; use the BEM solver");
    }
    const Vec3 s = detail::refined_sphere_integral(field, [&](double th, double ph, const Vec3&, const Vec3&,
                                                              const Vec3&) {
        const auto u = field.evaluate(th, ph);
        return Vec3{0.0, 0.0, u[0] * u[0] + u[1] * u[1]};
    });
    return 2.0 * eta * a * s[2];
}

/// Speed, power, efficiency and thrust of a constant-speed band from the closed forms.
inline PerformanceRecord band_performance(const BandActuation& band, const Scenario& scenario) {
    validate(band);
    if (band.profile != BandProfile::CONSTANT_MERIDIONAL) {
        throw UnsupportedInput("band_performance needs the constant meridional profile");
    }
    const double g = band.gamma, v = band.v, a = scenario.a, eta = scenario.eta;
    PerformanceRecord r;
    r.U = 0.25 * v * (g + std::sin(g));
    r.P_propel = 8.0 * pi * a * eta * v * v * std::sin(0.5 * g);
    r.efficiency = 3.0 / 64.0 * (g + std::sin(g)) * (g + std::sin(g)) / std::sin(0.5 * g);
    r.thrust = stokes_drag(a, eta, r.U);
    return r;
}

/// Band speed giving swimming speed U_target, v = 4U/(gamma + sin gamma).
inline double required_band_speed(double U_target, double gamma) {
    if (!(gamma > 0.0 && gamma <= pi)) throw InvalidParameter("band angle gamma must lie in (0, pi]");
    detail::require_nonnegative(U_target, "target speed");
    return 4.0 * U_target / (gamma + std::sin(gamma));
}

/// Rotation rate of the cos(phi) band, (3/4)(v/a) sin(gamma/2).
inline double band_rotation_rate(const BandActuation& band, double a) {
    validate(band);
    detail::require_positive(a, "radius a");
    return 0.75 * band.v / a * std::sin(0.5 * band.gamma);
}

/// Time to turn by `angle` at rate omega.
inline double turn_time(double angle, double omega) {
    detail::require_positive(omega, "rotation rate");
    return angle / omega;
}

}  // namespace microbot
