#pragma once

#include <cmath>

#include "constants.hpp"
#include "errors.hpp"

namespace microbot {

enum class Duty { STEADY, SINUSOIDAL };

inline double duty_factor(Duty d) { return d == Duty::STEADY ? 1.0 : 0.5; }

/// Phonon-scattering sliding friction, P = duty k S v^2.
struct FrictionModel {
    double k_friction = 1000.0;  ///< [kg/(m^2 s)]
    Duty duty = Duty::STEADY;
};

/// Sliding area per unit band area for the reference treadmill layout.
inline constexpr double treadmill_area_scaling = 20.0 / (2.0 * pi);

struct TreadmillDesign {
    double W = 100e-9;               ///< tread width [m]
    double L = 1e-6;                 ///< exposed length [m]
    double h = 1e-9;                 ///< tread thickness [m]
    double E = 1000e9;               ///< Young's modulus [Pa]
    double r = 50e-9;                ///< bearing radius [m]
    int count = 50;                  ///< treadmills on the band
    double sliding_area = 20e-12;    ///< treads and bearings [m^2]
    double failure_strength = 1e10;  ///< [Pa]
};

inline void validate(const TreadmillDesign& d) {
    detail::require_positive(d.W, "tread width W");
    detail::require_positive(d.L, "tread length L");
    detail::require_positive(d.h, "tread thickness h");
    detail::require_positive(d.E, "Young's modulus E");
    detail::require_positive(d.r, "bearing radius r");
    detail::require_positive(d.sliding_area, "sliding area");
    if (!(d.h < d.r)) throw InvalidParameter("tread thickness h must be below the bearing radius r");
    if (d.count < 1) throw InvalidParameter("treadmill count must be >= 1");
}

struct TreadmillAnalysis {
    double f;            ///< bearing rotation rate [Hz]
    double omega;        ///< bearing angular velocity [rad/s]
    double bend_strain;  ///< h/r
    double bend_stress;  ///< [Pa]
    double drag;         ///< fluid drag on one tread near a wall [N]
    double tension;      ///< [Pa]
};

struct RodArrayDesign {
    double rod_radius;
    double rod_length;
    int rod_count;
    double sliding_area;
    double max_displacement;
    double spacing;
};

struct PiezoRequirements {
    double voltage;  ///< [V]
    double field;    ///< [V/m]
};

inline double sliding_friction_power(const FrictionModel& model, double S, double v) {
    detail::require_positive(model.k_friction, "k_friction");
    detail::require_nonnegative(S, "sliding area S");
    detail::require_nonnegative(v, "speed v");
    return duty_factor(model.duty) * model.k_friction * S * v * v;
}

inline TreadmillAnalysis treadmill_analysis(const TreadmillDesign& design, double eta, double v, double d) {
    validate(design);
    detail::require_positive(eta, "viscosity eta");
    detail::require_nonnegative(v, "tread speed v");
    if (!(d > 0.0)) throw InvalidParameter("wall distance d must be positive");
    TreadmillAnalysis out;
    out.f = v / (2.0 * pi * design.r);
    out.omega = v / design.r;
    out.bend_strain = design.h / design.r;
    out.bend_stress = design.E * design.h / design.r;
    out.drag = eta * (v / d) * design.L * design.W;
    out.tension = out.drag / (design.h * design.W);
    return out;
}

/// Centrifugal stress at the rim of a wheel, rho v^2.
inline double wheel_rim_stress(double rho, double v) {
    detail::require_nonnegative(rho, "density rho");
    detail::require_nonnegative(v, "rim speed v");
    return rho * v * v;
}

/// One rod per patch of side pi a / n_max, rods five displacements long.
inline RodArrayDesign rod_array_for_modes(int n_max, double a, double rod_radius, double max_disp) {
    if (n_max < 2) throw InvalidParameter("rod array needs n_max >= 2");
    detail::require_positive(a, "radius a");
    detail::require_positive(rod_radius, "rod radius");
    detail::require_positive(max_disp, "max displacement");
    RodArrayDesign r;
    r.spacing = pi * a / n_max;
    r.rod_count = static_cast<int>(std::lround(4.0 * pi * a * a / (r.spacing * r.spacing)));
    r.rod_radius = rod_radius;
    r.max_displacement = max_disp;
    r.rod_length = 5.0 * max_disp;
    r.sliding_area = r.rod_count * 2.0 * pi * rod_radius * r.rod_length;
    return r;
}

/// Voltage across a slab of thickness a for displacement a eps.
inline PiezoRequirements piezo_requirements(double epsilon, double a, double d_per_volt) {
    detail::require_nonnegative(epsilon, "epsilon");
    detail::require_positive(a, "radius a");
    detail::require_positive(d_per_volt, "piezo coefficient");
    const double V = a * epsilon / d_per_volt;
    return {V, V / a};
}

/// Treadmill sliding area for a band of area S_p.
inline double treadmill_sliding_area(double S_p) {
    detail::require_nonnegative(S_p, "band area");
    return treadmill_area_scaling * S_p;
}

}  // namespace microbot
