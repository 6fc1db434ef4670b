#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "actuator_models.hpp"
#include "brownian_nav.hpp"
#include "parallel.hpp"
#include "sphere_tangential.hpp"
#include "squirmer_modes.hpp"
#include "stokes_field.hpp"

namespace microbot {

enum class Method { TANGENTIAL, OSCILLATING };

inline std::string to_string(Method m) { return m == Method::TANGENTIAL ? "tangential" : "oscillating"; }

struct ConstraintSet {
    double P_max = 1e-12;           ///< [W]
    double stress_max = 1.0;        ///< [Pa]
    double probe_distance = 1e-6;   ///< from the surface [m]
    double nav_distance = 20e-6;    ///< [m]
    double alpha_rms = 20.0 * pi / 180.0;
};

inline void validate(const ConstraintSet& c) {
    detail::require_positive(c.P_max, "P_max");
    detail::require_positive(c.stress_max, "stress_max");
    detail::require_positive(c.probe_distance, "probe distance");
    detail::require_positive(c.nav_distance, "navigation distance");
    detail::require_positive(c.alpha_rms, "alpha_rms");
}

enum ConstraintIndex { POWER = 0, STRESS = 1, BROWNIAN = 2 };

struct FeasibilityCell {
    double U = 0.0;
    double eta = 0.0;
    Method method = Method::TANGENTIAL;
    bool pass[3] = {false, false, false};
    double margin[3] = {0.0, 0.0, 0.0};  ///< value / limit; pass iff <= 1
    double P_propel = 0.0;
    double P_internal = 0.0;
    double stress = 0.0;
    double U_required = 0.0;
    double womersley = 0.0;
    bool model_invalid = false;  ///< quasi-static assumption breaks down
    bool out_of_range = false;   ///< outside the mapped (U, eta) window

    bool all_pass() const { return pass[0] && pass[1] && pass[2]; }
    double internal_fraction() const {
        const double t = P_propel + P_internal;
        return t > 0.0 ? P_internal / t : 0.0;
    }
};

/**
 * @brief Reference designs for both methods on a sphere.
 *
 * Flow fields are linear in the actuation speed and independent of viscosity,
 * so shear per unit locomotion speed is computed once.
 */
class ReferenceDesigns {
public:
    explicit ReferenceDesigns(double a = 1e-6, double rho = 1000.0, double T = 310.0,
                              double probe_distance = 1e-6)
        : a_(a), rho_(rho), T_(T), probe_(probe_distance) {
        detail::require_positive(a, "radius a");
        detail::require_positive(rho, "density rho");
        detail::require_positive(T, "temperature T");
        spectrum_ = normalize_spectrum(optimal_spectrum(10, 10, epsilon), a);
        coeff_ = oscillation_coefficients(spectrum_);
        rods_ = rod_array_for_modes(spectrum_.n_max(), a, 50e-9, a * epsilon);

        Scenario s = make_scenario(Preset::LOW);
        s.a = a;
        s.rho = rho;
        s.T_body = T;
        s.nu = s.eta / s.rho;
        s.U = 1.0;  // unit speed
        const BandActuation band{gamma, required_band_speed(1.0, gamma)};
        shear_per_U_[0] = shear_and_stress(band_mode(s, band), probe_, s.eta).shear_rate;
        ModeSpectrum spec = spectrum_;
        spec.omega = omega_for_speed(coeff_, a, epsilon, 1.0);
        shear_per_U_[1] = shear_and_stress(oscillating_mode(s, spec), probe_, s.eta).shear_rate;
    }

    static constexpr double gamma = pi / 3.0;
    static constexpr double epsilon = 0.05;
    static constexpr double tread_area = 20e-12;

    double a() const { return a_; }
    double probe_distance() const { return probe_; }
    const ModeSpectrum& spectrum() const { return spectrum_; }
    const OscillationCoefficients& coefficients() const { return coeff_; }
    const RodArrayDesign& rods() const { return rods_; }
    double shear_per_speed(Method m) const { return shear_per_U_[m == Method::TANGENTIAL ? 0 : 1]; }

    /**
     * @brief Evaluate power, stress and navigation constraints at (U, eta).
     */
    FeasibilityCell evaluate(Method method, double U, double eta, const ConstraintSet& c,
                             const FrictionModel& friction = {}) const {
        validate(c);
        detail::require_positive(U, "speed U");
        detail::require_positive(eta, "viscosity eta");
        if (c.probe_distance != probe_) throw InvalidParameter("probe distance differs from the reference designs");
        FeasibilityCell cell;
        cell.U = U;
        cell.eta = eta;
        cell.method = method;
        cell.out_of_range = U < 1e-6 * (1 - 1e-12) || U > 1e-2 * (1 + 1e-12) || eta < 1e-3 * (1 - 1e-12) ||
                            eta > 10.0 * (1 + 1e-12);
        if (method == Method::TANGENTIAL) {
            const double v = required_band_speed(U, gamma);
            cell.P_propel = 8.0 * pi * a_ * eta * v * v * std::sin(0.5 * gamma);
            cell.P_internal = sliding_friction_power({friction.k_friction, Duty::STEADY}, tread_area, v);
        } else {
            const double w = omega_for_speed(coeff_, a_, epsilon, U);
            cell.P_propel = coeff_.C_P * a_ * a_ * a_ * epsilon * epsilon * eta * w * w;
            cell.P_internal =
                sliding_friction_power({friction.k_friction, Duty::SINUSOIDAL}, rods_.sliding_area, a_ * epsilon * w);
            cell.womersley = a_ * std::sqrt(w * rho_ / eta);
            cell.model_invalid = cell.womersley > 1.0;
        }
        cell.stress = eta * shear_per_speed(method) * U;
        cell.U_required = dead_reckoning_speed(c.nav_distance, orientation_time(a_, eta, T_), c.alpha_rms);
        cell.margin[POWER] = (cell.P_propel + cell.P_internal) / c.P_max;
        cell.margin[STRESS] = cell.stress / c.stress_max;
        cell.margin[BROWNIAN] = cell.U_required / U;
        for (int i = 0; i < 3; ++i) cell.pass[i] = cell.margin[i] <= 1.0;
        return cell;
    }

private:
    double a_, rho_, T_, probe_;
    ModeSpectrum spectrum_;
    OscillationCoefficients coeff_;
    RodArrayDesign rods_{};
    double shear_per_U_[2] = {0.0, 0.0};
};

inline FeasibilityCell evaluate_constraints(Method method, double U, double eta, const ConstraintSet& c) {
    const ReferenceDesigns ref(1e-6, 1000.0, 310.0, c.probe_distance);
    return ref.evaluate(method, U, eta, c);
}

/// n log-spaced values from lo to hi inclusive.
inline std::vector<double> log_range(double lo, double hi, int n) {
    detail::require_positive(lo, "range start");
    detail::require_positive(hi, "range end");
    if (n < 2) throw InvalidParameter("log_range needs n >= 2");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo * std::pow(hi / lo, i / (n - 1.0));
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// Cells in row-major order: eta outer, U inner.
struct FeasibilityGrid {
    std::vector<double> U;
    std::vector<double> eta;
    Method method = Method::TANGENTIAL;
    std::vector<FeasibilityCell> cells;

    const FeasibilityCell& at(std::size_t i_eta, std::size_t i_U) const { return cells[i_eta * U.size() + i_U]; }
};

inline FeasibilityGrid feasibility_grid(const std::vector<double>& U_range, const std::vector<double>& eta_range,
                                        Method method, const ConstraintSet& c, const ReferenceDesigns& ref,
                                        unsigned threads = 1) {
    FeasibilityGrid g{U_range, eta_range, method, {}};
    g.cells.resize(U_range.size() * eta_range.size());
    parallel_for(g.cells.size(), threads, [&](std::size_t k) {
        g.cells[k] = ref.evaluate(method, U_range[k % U_range.size()], eta_range[k / U_range.size()], c);
    });
    return g;
}

inline double resonance_estimate(double k_s, double m) {
    detail::require_positive(k_s, "stiffness");
    detail::require_positive(m, "mass");
    return std::sqrt(k_s / m) / (2.0 * pi);
}

}  // namespace microbot
