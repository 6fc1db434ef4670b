#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "constants.hpp"
#include "errors.hpp"

namespace microbot {

/// Fluid and robot parameter bundle, SI units throughout.
struct Scenario {
    std::string name;
    double c = 1500.0;      ///< speed of sound [m/s]
    double rho = 1000.0;    ///< fluid density [kg/m^3]
    double T_body = 310.0;  ///< temperature [K]
    double eta = 1e-3;      ///< dynamic viscosity [Pa s]
    double nu = 1e-6;       ///< kinematic viscosity [m^2/s], always eta/rho
    double a = 1e-6;        ///< robot radius [m]
    double U = 100e-6;      ///< target locomotion speed [m/s]
};

/// Speed, power, efficiency and thrust of one design in one scenario.
struct PerformanceRecord {
    double U = 0.0;           ///< locomotion speed [m/s]
    double P_propel = 0.0;    ///< power delivered to the fluid [W]
    double P_internal = 0.0;  ///< internal dissipation [W]
    double efficiency = 0.0;  ///< P_drag / P_propel
    double thrust = 0.0;      ///< [N]

    double P_total() const { return P_propel + P_internal; }
};

enum class Preset { LOW, HIGH };

/**
 * @brief Stokes drag on a sphere, F = 6 pi eta a U.
 * @param a    Radius [m]
 * @param eta  Dynamic viscosity [Pa s]
 * @param U    Speed [m/s]
 * @return Drag force [N]
 */
inline double stokes_drag(double a, double eta, double U) {
    detail::require_positive(a, "radius a");
    detail::require_positive(eta, "viscosity eta");
    detail::require_nonnegative(U, "speed U");
    return 6.0 * pi * eta * a * U;
}

/// Power needed to drag a sphere at speed U [W].
inline double drag_power(double a, double eta, double U) { return stokes_drag(a, eta, U) * U; }

/// Reynolds number aU/nu.
inline double reynolds(double a, double U, double nu) {
    detail::require_positive(a, "radius a");
    detail::require_positive(nu, "kinematic viscosity nu");
    detail::require_nonnegative(U, "speed U");
    return a * U / nu;
}

inline double reynolds(const Scenario& s) { return reynolds(s.a, s.U, s.nu); }

inline void validate(const Scenario& s) {
    detail::require_positive(s.c, "c");
    detail::require_positive(s.rho, "rho");
    detail::require_positive(s.T_body, "T_body");
    detail::require_positive(s.eta, "eta");
    detail::require_positive(s.nu, "nu");
    detail::require_positive(s.a, "a");
    detail::require_positive(s.U, "U");
    if (s.nu != s.eta / s.rho) throw InvalidParameter("nu must equal eta/rho");
}

inline Scenario make_scenario(Preset preset) {
    Scenario s;
    if (preset == Preset::LOW) {
        s.name = "low";
        s.eta = 1e-3;
        s.U = 100e-6;
    } else {
        s.name = "high";
        s.eta = 10.0;
        s.U = 1e-6;
    }
    s.nu = s.eta / s.rho;
    return s;
}

/// Preset by name ("low" / "high", case-insensitive).
inline Scenario make_scenario(const std::string& preset) {
    std::string key = preset;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (key == "low") return make_scenario(Preset::LOW);
    if (key == "high") return make_scenario(Preset::HIGH);
    throw InvalidParameter("unknown scenario preset '" + preset + "'; valid presets: low, high");
}

/// Explicit scenario; nu is derived from eta/rho.
inline Scenario make_scenario(std::string name, double c, double rho, double T_body, double eta, double a,
                              double U) {
    Scenario s{std::move(name), c, rho, T_body, eta, eta / rho, a, U};
    validate(s);
    return s;
}

/// Fill efficiency and thrust of a record from its speed and propulsion power.
inline PerformanceRecord complete_record(double U, double P_propel, double P_internal, double a, double eta) {
    PerformanceRecord r;
    r.U = U;
    r.P_propel = P_propel;
    r.P_internal = P_internal;
    r.thrust = stokes_drag(a, eta, U);
    r.efficiency = P_propel > 0.0 ? drag_power(a, eta, U) / P_propel : 0.0;
    return r;
}

}  // namespace microbot
