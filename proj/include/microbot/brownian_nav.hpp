#pragma once

#include <cmath>

#include "constants.hpp"
#include "errors.hpp"
#include "stokes_bem.hpp"

namespace microbot {

struct BrownianRecord {
    double D = 0.0;    ///< translational diffusion [m^2/s]
    double tau = 0.0;  ///< orientation time [s]
    double D_m = 0.0;  ///< motile diffusion [m^2/s]
};

inline double translational_diffusion(double a, double eta, double T) {
    detail::require_positive(a, "radius a");
    detail::require_positive(eta, "viscosity eta");
    detail::require_positive(T, "temperature T");
    return k_boltzmann * T / (6.0 * pi * a * eta);
}

inline double orientation_time(double a, double eta, double T) {
    detail::require_positive(a, "radius a");
    detail::require_positive(eta, "viscosity eta");
    detail::require_positive(T, "temperature T");
    return 4.0 * pi * a * a * a * eta / (k_boltzmann * T);
}

/**
 * @brief Rotational friction of a prolate spheroid about a transverse axis.
 * @return Torque per angular velocity [N m s]
 */
inline double transverse_rotational_friction(const SpheroidShape& shape, double eta) {
    validate(shape);
    detail::require_positive(eta, "viscosity eta");
    const double a = shape.a, b = shape.b;
    if (a == b) return 8.0 * pi * eta * a * a * a;
    const double e = std::sqrt(a * a - b * b);
    if (e < 1e-4 * a) {
        // near-sphere expansion avoids cancellation; first order in the eccentricity squared
        return 8.0 * pi * eta * a * b * b * (1.0 + 0.2 * (a - b) / b);
    }
    const double S = 2.0 / e * std::log((a + e) / b);
    return 32.0 * pi * eta / 3.0 * (a * a * a * a - b * b * b * b) / ((2.0 * a * a - b * b) * S - 2.0 * a);
}

/// Heading-loss time of a spheroid from transverse rotational diffusion.
inline double spheroid_orientation_time(const SpheroidShape& shape, double eta, double T) {
    detail::require_positive(T, "temperature T");
    return transverse_rotational_friction(shape, eta) / (2.0 * k_boltzmann * T);
}

inline double rms_displacement(double D, double t) {
    detail::require_nonnegative(D, "diffusion D");
    detail::require_nonnegative(t, "time t");
    return std::sqrt(6.0 * D * t);
}

inline double motile_diffusion(double tau, double U) {
    detail::require_nonnegative(tau, "tau");
    detail::require_nonnegative(U, "speed U");
    return tau * U * U / 3.0;
}

/// Slowest speed that keeps the rms heading change below alpha_rms over distance d.
inline double dead_reckoning_speed(double d, double tau, double alpha_rms) {
    if (!(alpha_rms > 0.0)) throw InvalidParameter("alpha_rms must be positive (zero needs infinite speed)");
    detail::require_positive(d, "distance d");
    detail::require_positive(tau, "tau");
    return d / (tau * alpha_rms * alpha_rms);
}

inline BrownianRecord brownian_record(double a, double eta, double T, double U) {
    BrownianRecord r;
    r.D = translational_diffusion(a, eta, T);
    r.tau = orientation_time(a, eta, T);
    r.D_m = motile_diffusion(r.tau, U);
    return r;
}

}  // namespace microbot
