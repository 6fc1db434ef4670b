#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "actuator_models.hpp"
#include "brownian_nav.hpp"
#include "design_space.hpp"
#include "io/table.hpp"
#include "scenario.hpp"
#include "shape_tradeoff.hpp"
#include "sphere_tangential.hpp"
#include "squirmer_modes.hpp"
#include "stokes_field.hpp"

namespace microbot::reports {

using io::Table;

namespace detail {

inline Table quantity_table() { return Table{{{"quantity", ""}, {"value", ""}, {"unit", ""}}, {}}; }

inline void row(Table& t, const std::string& q, double v, const std::string& unit) { t.add({q, v, unit}); }

inline void row(Table& t, const std::string& q, long long v, const std::string& unit) { t.add({q, v, unit}); }

}  // namespace detail

/// Scenario parameters, Reynolds number, drag force and drag power.
inline Table table1(const Scenario& s) {
    validate(s);
    Table t = detail::quantity_table();
    detail::row(t, "speed_of_sound", s.c, "m/s");
    detail::row(t, "density", s.rho, "kg/m^3");
    detail::row(t, "temperature", s.T_body, "K");
    detail::row(t, "viscosity", s.eta, "Pa s");
    detail::row(t, "kinematic_viscosity", s.nu, "m^2/s");
    detail::row(t, "radius", s.a, "m");
    detail::row(t, "locomotion_speed", s.U, "m/s");
    detail::row(t, "reynolds_number", reynolds(s), "1");
    detail::row(t, "drag_force", stokes_drag(s.a, s.eta, s.U), "N");
    detail::row(t, "drag_power", drag_power(s.a, s.eta, s.U), "W");
    return t;
}

/// Equatorial band performance: closed forms next to surface quadrature.
inline Table table2(const Scenario& s, double gamma = pi / 3.0) {
    validate(s);
    const BandActuation band{gamma, required_band_speed(s.U, gamma)};
    const auto closed = band_performance(band, s);
    const auto field = band_field(band);
    const double U_q = locomotion_velocity(field, s.a)[2];
    const double P_q = propulsion_power(field, s.a, s.eta);
    const auto quad = complete_record(U_q, P_q, 0.0, s.a, s.eta);
    Table t{{{"quantity", ""}, {"closed_form", ""}, {"quadrature", ""}, {"unit", ""}}, {}};
    t.add({"band_angle", gamma, gamma, "rad"});
    t.add({"area_fraction", std::sin(0.5 * gamma), std::sin(0.5 * gamma), "1"});
    t.add({"surface_speed", band.v, band.v, "m/s"});
    t.add({"locomotion_speed", closed.U, quad.U, "m/s"});
    t.add({"power", closed.P_propel, quad.P_propel, "W"});
    t.add({"efficiency", closed.efficiency, quad.efficiency, "1"});
    t.add({"thrust", closed.thrust, quad.thrust, "N"});
    return t;
}

/// Rotation by a cos(phi) band.
inline Table table3(double a = 1e-6, double v = 267e-6, double gamma = pi / 3.0, double turn_angle = pi / 2.0) {
    BandActuation band{gamma, v, BandProfile::COS_PHI_ROTATION};
    const double omega = band_rotation_rate(band, a);
    const double omega_q = std::abs(angular_velocity(band_field(band), a)[1]);
    Table t{{{"quantity", ""}, {"closed_form", ""}, {"quadrature", ""}, {"unit", ""}}, {}};
    t.add({"band_angle", gamma, gamma, "rad"});
    t.add({"area_fraction", std::sin(0.5 * gamma), std::sin(0.5 * gamma), "1"});
    t.add({"max_surface_speed", v, v, "m/s"});
    t.add({"angular_velocity", omega, omega_q, "rad/s"});
    t.add({"turn_time", turn_time(turn_angle, omega), turn_time(turn_angle, omega_q), "s"});
    return t;
}

/// Treadmill structure and friction for the band speed of the scenario.
inline Table table4(const Scenario& s, const TreadmillDesign& design = {}, double wall_distance = 100e-9,
                    double gamma = pi / 3.0, const FrictionModel& friction = {}) {
    validate(s);
    const double v = required_band_speed(s.U, gamma);
    const auto r = treadmill_analysis(design, s.eta, v, wall_distance);
    Table t = detail::quantity_table();
    detail::row(t, "tread_width", design.W, "m");
    detail::row(t, "tread_length", design.L, "m");
    detail::row(t, "tread_thickness", design.h, "m");
    detail::row(t, "youngs_modulus", design.E, "Pa");
    detail::row(t, "tread_speed", v, "m/s");
    detail::row(t, "bearing_radius", design.r, "m");
    detail::row(t, "rotation_rate", r.f, "Hz");
    detail::row(t, "angular_velocity", r.omega, "rad/s");
    detail::row(t, "bend_strain", r.bend_strain, "1");
    detail::row(t, "bend_stress", r.bend_stress, "Pa");
    detail::row(t, "wall_distance", wall_distance, "m");
    detail::row(t, "tread_drag", r.drag, "N");
    detail::row(t, "tread_tension", r.tension, "Pa");
    detail::row(t, "sliding_area", design.sliding_area, "m^2");
    detail::row(t, "friction_power", sliding_friction_power(friction, design.sliding_area, v), "W");
    return t;
}

/// Oscillation frequency scaled from 2 kHz at 100 um/s, and quasi-static criteria.
inline Table table4_osc(const Scenario& s, double f_ref = 2000.0, double U_ref = 100e-6) {
    validate(s);
    const double f = f_ref * s.U / U_ref;
    const double w = 2.0 * pi * f;
    const auto q = quasistatic_validity(s, w);
    Table t = detail::quantity_table();
    detail::row(t, "frequency", f, "Hz");
    detail::row(t, "angular_frequency", w, "rad/s");
    detail::row(t, "damping_length", q.delta, "m");
    detail::row(t, "womersley_number", q.womersley, "1");
    return t;
}

/// Oscillating sphere with the (k, p) spectrum, frequency solved from the scenario speed.
inline Table table5(const Scenario& s, int k = 10, int p = 10, double epsilon = 0.05,
                    const FrictionModel& friction = {1000.0, Duty::SINUSOIDAL}) {
    validate(s);
    ModeSpectrum spec = normalize_spectrum(optimal_spectrum(k, p, epsilon), s.a);
    const auto c = oscillation_coefficients(spec);
    spec.omega = omega_for_speed(c, s.a, epsilon, s.U);
    const auto perf = oscillation_performance(spec, s, &c);
    const auto rods = rod_array_for_modes(std::max(spec.n_max(), 2), s.a, 50e-9, s.a * epsilon);
    const double v_max = s.a * epsilon * spec.omega;
    Table t = detail::quantity_table();
    detail::row(t, "max_surface_displacement", s.a * epsilon, "m");
    detail::row(t, "angular_frequency", spec.omega, "rad/s");
    detail::row(t, "max_surface_speed", v_max, "m/s");
    detail::row(t, "locomotion_speed", perf.U, "m/s");
    detail::row(t, "power", perf.P_propel, "W");
    detail::row(t, "efficiency", perf.efficiency, "1");
    detail::row(t, "thrust", perf.thrust, "N");
    detail::row(t, "C_U", c.C_U, "1");
    detail::row(t, "C_P", c.C_P, "1");
    detail::row(t, "C_eff", c.C_eff, "1");
    detail::row(t, "C_T", c.C_T, "1");
    detail::row(t, "rod_count", static_cast<long long>(rods.rod_count), "1");
    detail::row(t, "rod_sliding_area", rods.sliding_area, "m^2");
    detail::row(t, "friction_power", sliding_friction_power(friction, rods.sliding_area, v_max), "W");
    return t;
}

/// Brownian motion of the robot sphere.
inline Table table6(const Scenario& s, double travel = 100e-6) {
    validate(s);
    const auto b = brownian_record(s.a, s.eta, s.T_body, s.U);
    Table t = detail::quantity_table();
    detail::row(t, "translational_diffusion", b.D, "m^2/s");
    detail::row(t, "rms_displacement", rms_displacement(b.D, travel / s.U), "m");
    detail::row(t, "orientation_time", b.tau, "s");
    detail::row(t, "travel_during_orientation_time", s.U * b.tau, "m");
    detail::row(t, "motile_diffusion", b.D_m, "m^2/s");
    return t;
}

/// Maximum fluid speed against distance from the surface for the three motions.
inline Table fig8(const Scenario& s, double d_min_rel = 0.05, double d_max_rel = 100.0, int n = 61,
                  unsigned threads = 1) {
    validate(s);
    const auto dragged = dragged_mode(s);
    const auto band = band_mode(s, BandActuation{pi / 3.0, required_band_speed(s.U, pi / 3.0)});
    const auto osc = oscillating_mode_for_speed(s, optimal_spectrum(10, 10, 0.05));
    const auto d_rel = log_range(d_min_rel, d_max_rel, n);
    std::vector<std::array<double, 3>> v(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const double d = d_rel[i] * s.a;
        v[i] = {max_speed_vs_distance(dragged, d), max_speed_vs_distance(band, d), max_speed_vs_distance(osc, d)};
    });
    Table t{{{"d_over_a", "1"}, {"dragged", "m/s"}, {"tangential", "m/s"}, {"oscillating", "m/s"}}, {}};
    for (int i = 0; i < n; ++i) t.add({d_rel[i], v[i][0], v[i][1], v[i][2]});
    return t;
}

/// Speed, shear envelope and stress against distance for the three motions.
inline Table fieldscan(const Scenario& s, double d_min_rel = 0.05, double d_max_rel = 100.0, int n = 41,
                       unsigned threads = 1) {
    validate(s);
    const MotionMode modes[3] = {dragged_mode(s),
                                 band_mode(s, BandActuation{pi / 3.0, required_band_speed(s.U, pi / 3.0)}),
                                 oscillating_mode_for_speed(s, optimal_spectrum(10, 10, 0.05))};
    const char* names[3] = {"dragged", "tangential", "oscillating"};
    const auto d_rel = log_range(d_min_rel, d_max_rel, n);
    std::vector<std::array<double, 6>> v(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const double d = d_rel[i] * s.a;
        for (int m = 0; m < 3; ++m) {
            v[i][m] = max_speed_vs_distance(modes[m], d);
            v[i][3 + m] = shear_and_stress(modes[m], d, s.eta).shear_rate;
        }
    });
    Table t{{{"d", "m"}, {"d_over_a", "1"}}, {}};
    for (const char* nm : names) t.columns.push_back({std::string("speed_") + nm, "m/s"});
    for (const char* nm : names) t.columns.push_back({std::string("shear_") + nm, "1/s"});
    for (const char* nm : names) t.columns.push_back({std::string("stress_") + nm, "Pa"});
    for (int i = 0; i < n; ++i) {
        std::vector<io::Cell> row{d_rel[i] * s.a, d_rel[i]};
        for (int m = 0; m < 6; ++m) row.push_back(v[i][m]);
        for (int m = 0; m < 3; ++m) row.push_back(s.eta * v[i][3 + m]);
        t.add(row);
    }
    return t;
}

/// b values spaced evenly from hi down to lo.
inline std::vector<double> b_grid(double lo, double hi, int n) {
    if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw InvalidParameter("b grid needs 0 < lo < hi and n >= 2");
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) b[i] = hi - (hi - lo) * i / (n - 1.0);
    b.front() = hi;
    b.back() = lo;
    return b;
}

inline Table shape_sweep_table(const std::vector<RelativeDesign>& sweep, bool absolute) {
    Table t{{{"b", "m"}, {"a", "m"}, {"v_rel", "1"}, {"P_propel_rel", "1"}, {"P_total_rel", "1"}}, {}};
    if (absolute) {
        for (auto c : std::vector<io::Column>{{"S_p", "m^2"}, {"v", "m/s"}, {"P_propel", "W"}, {"P_internal", "W"}}) {
            t.columns.push_back(c);
        }
    }
    for (const auto& r : sweep) {
        std::vector<io::Cell> row{r.design.shape.b, r.design.shape.a, r.v_rel, r.P_propel_rel, r.P_total_rel};
        if (absolute) {
            row.insert(row.end(), {r.design.S_p, r.design.v, r.design.P_propel, r.design.P_internal});
        }
        t.add(row);
    }
    return t;
}

inline Table brownian_sweep_table(const std::vector<BrownianShapePoint>& pts, const std::vector<double>* energy) {
    Table t{{{"b", "m"}, {"a", "m"}, {"U_required", "m/s"}}, {}};
    if (energy) {
        t.columns.push_back({"orientation_time", "s"});
        t.columns.push_back({"travel_energy", "J"});
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<io::Cell> row{pts[i].shape.b, pts[i].shape.a, pts[i].U_required};
        if (energy) row.insert(row.end(), {pts[i].tau, (*energy)[i]});
        t.add(row);
    }
    return t;
}

inline Table tradeoff_table(const std::vector<FeasibilityGrid>& grids) {
    Table t{{{"U", "m/s"},
             {"eta", "Pa s"},
             {"method", ""},
             {"pass_power", ""},
             {"pass_stress", ""},
             {"pass_brownian", ""},
             {"margin_power", "1"},
             {"margin_stress", "1"},
             {"margin_brownian", "1"},
             {"P_propel", "W"},
             {"P_internal", "W"},
             {"shear_stress", "Pa"},
             {"U_required", "m/s"},
             {"womersley", "1"},
             {"model_invalid", ""}},
            {}};
    for (const auto& g : grids) {
        for (const auto& c : g.cells) {
            t.add({c.U, c.eta, to_string(c.method), (long long)c.pass[0], (long long)c.pass[1], (long long)c.pass[2],
                   c.margin[0], c.margin[1], c.margin[2], c.P_propel, c.P_internal, c.stress, c.U_required, c.womersley,
                   (long long)c.model_invalid});
        }
    }
    return t;
}

/// Per-method counts of passing cells.
inline nlohmann::ordered_json tradeoff_summary(const std::vector<FeasibilityGrid>& grids) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& g : grids) {
        long long n_all = 0, n_p = 0, n_s = 0, n_b = 0, n_invalid = 0, n_internal = 0;
        for (const auto& c : g.cells) {
            n_all += c.all_pass();
            n_p += c.pass[POWER];
            n_s += c.pass[STRESS];
            n_b += c.pass[BROWNIAN];
            n_invalid += c.model_invalid;
            n_internal += c.internal_fraction() > 0.1;
        }
        nlohmann::ordered_json mask = nlohmann::ordered_json::array();
        for (std::size_t ie = 0; ie < g.eta.size(); ++ie) {
            std::string line;
            for (std::size_t iu = 0; iu < g.U.size(); ++iu) line += g.at(ie, iu).all_pass() ? '#' : '.';
            mask.push_back(line);
        }
        j.push_back({{"method", to_string(g.method)},
                     {"cells", g.cells.size()},
                     {"U_range", {g.U.front(), g.U.back()}},
                     {"eta_range", {g.eta.front(), g.eta.back()}},
                     {"pass_all", n_all},
                     {"pass_power", n_p},
                     {"pass_stress", n_s},
                     {"pass_brownian", n_b},
                     {"model_invalid", n_invalid},
                     {"internal_over_10_percent", n_internal},
                     {"all_pass_mask_rows_eta_ascending", mask}});
    }
    return j;
}

}  // namespace microbot::reports
