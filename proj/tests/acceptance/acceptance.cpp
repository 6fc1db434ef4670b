// Acceptance report: one PASS/FAIL line per criterion.
// Usage: acceptance <path to microbot_cli>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <microbot.hpp>
#include <microbot/reports.hpp>

using namespace microbot;

namespace {

// criteria that cannot pass as stated; see the README
const std::set<int> known_deviations = {8, 9, 12};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [fail: " << what << "]";
        }
    }
    void near(double value, double target, double tol, const std::string& what) {
        const double r = std::abs(value - target) / std::abs(target);
        char buf[160];
        std::snprintf(buf, sizeof buf, " %s=%.4g (target %.4g, %.1f%%)", what.c_str(), value, target, 100 * r);
        detail << buf;
        expect(r <= tol, what);
    }
    void note(const std::string& s) { detail << " " << s; }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<int> failed;

void report(int id, const std::string& name, const Check& c) {
    std::printf("%s %2d %s:%s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), c.detail.str().c_str());
    std::fflush(stdout);
    if (!c.ok) failed.push_back(id);
}

const Scenario low = make_scenario(Preset::LOW);
const Scenario high = make_scenario(Preset::HIGH);

void scenario_quantities() {
    Check c;
    Timer t;
    c.near(reynolds(low), 1e-4, 0.1, "Re_low");
    c.near(reynolds(high), 1e-10, 0.1, "Re_high");
    c.near(stokes_drag(low.a, low.eta, low.U), 2e-12, 0.1, "F_low");
    c.near(stokes_drag(high.a, high.eta, high.U), 200e-12, 0.1, "F_high");
    c.near(drag_power(low.a, low.eta, low.U), 2e-16, 0.1, "P_low");
    c.near(drag_power(high.a, high.eta, high.U), 2e-16, 0.1, "P_high");
    c.expect(stokes_drag(low.a, low.eta, low.U) == 6 * pi * 1e-3 * 1e-6 * 100e-6, "exact drag");
    const double s = t.seconds();
    c.note(fmt("time=%.3gs", s));
    c.expect(s < 1.0, "runtime");
    report(1, "scenario quantities", c);
}

void band_performance_check() {
    Check c;
    Timer t;
    for (const Scenario& s : {low, high}) {
        const double v = s.U * 2.1;  // 210 and 2.1 um/s
        const BandActuation band{pi / 3, v};
        const auto r = band_performance(band, s);
        const std::string tag = s.name + "_";
        c.near(r.U, s.U, 0.01, tag + "U");
        c.near(r.P_propel, 0.00055e-12, 0.02, tag + "P");
        c.near(r.efficiency, 0.34, 0.02, tag + "eff");
        c.near(r.thrust, s.name == "low" ? 1.9e-12 : 190e-12, 0.02, tag + "thrust");
        const auto f = band_field(band);
        const double Uq = locomotion_velocity(f, s.a)[2], Pq = propulsion_power(f, s.a, s.eta);
        c.expect(std::abs(Uq - r.U) <= 1e-6 * r.U, tag + "U quadrature");
        c.expect(std::abs(Pq - r.P_propel) <= 1e-6 * r.P_propel, tag + "P quadrature");
        c.note(fmt("quad_dU=%.1e", std::abs(Uq / r.U - 1)) + fmt(" quad_dP=%.1e", std::abs(Pq / r.P_propel - 1)));
    }
    const double s = t.seconds();
    c.note(fmt("time=%.3gs", s));
    c.expect(s < 1.0, "runtime");
    report(2, "equatorial band performance", c);
}

void rotation_check() {
    Check c;
    const BandActuation band{pi / 3, 267e-6, BandProfile::COS_PHI_ROTATION};
    const auto W = angular_velocity(band_field(band), 1e-6);
    const double w = std::sqrt(W[0] * W[0] + W[1] * W[1] + W[2] * W[2]);
    c.near(w, 100.0, 0.01, "Omega");
    c.near(turn_time(pi / 2, w), 15.7e-3, 0.01, "turn");
    report(3, "rotation by a cos(phi) band", c);
}

void treadmill_check() {
    Check c;
    const auto r = treadmill_analysis(TreadmillDesign{}, low.eta, 210e-6, 100e-9);
    c.near(r.f, 700.0, 0.05, "f");
    c.near(r.omega, 4200.0, 0.05, "omega");
    c.near(r.bend_strain, 0.02, 0.05, "strain");
    c.near(r.bend_stress, 20e9, 0.05, "stress");
    c.near(r.drag, 0.2e-12, 0.05, "F");
    c.near(r.tension, 2000.0, 0.05, "tension");
    report(4, "treadmill structure", c);
}

void quasistatic_check() {
    Check c;
    const auto l = quasistatic_validity(low, 2 * pi * 2000);
    const auto h = quasistatic_validity(high, 2 * pi * 20);
    c.near(l.delta, 13e-6, 0.15, "delta_low");
    c.near(h.delta, 13000e-6, 0.15, "delta_high");
    c.near(l.womersley, 0.1, 0.15, "Wo_low");
    c.near(h.womersley, 1e-4, 0.15, "Wo_high");
    report(5, "quasi-static criteria", c);
}

void oscillation_check() {
    Check c;
    Timer t;
    const auto spec = normalize_spectrum(optimal_spectrum(10, 10, 0.05), 1e-6);
    const auto k = oscillation_coefficients(spec);
    const double te = t.seconds();
    c.near(k.C_U, 3.29, 0.05, "C_U");
    c.near(k.C_P, 65.5, 0.05, "C_P");
    c.near(k.C_eff, 3.12, 0.05, "C_eff");
    c.near(k.C_T, 62.1, 0.05, "C_T");
    c.note(fmt("expansion=%.2gs", te));
    c.expect(te < 10.0, "expansion runtime");
    Timer t2;
    auto s2 = normalize_spectrum(optimal_spectrum(10, 10, 0.02), 1e-6);
    s2.omega = 2 * pi * 2000;
    const double U = swim_oscillation_oracle(s2, 1e-6, low, 1, {128}, 64);
    const double to = t2.seconds();
    c.near(U / (1e-6 * 0.02 * 0.02 * s2.omega), oscillation_coefficients(s2).C_U, 0.1, "oracle_C_U");
    c.note(fmt("oracle=%.3gs", to));
    c.expect(to < 600.0, "oracle runtime");
    report(6, "oscillation coefficients and oracle", c);
}

void disturbance_check() {
    Check c;
    const auto dr = dragged_mode(low);
    const auto bd = band_mode(low, {pi / 3, required_band_speed(low.U, pi / 3)});
    const auto os = oscillating_mode_for_speed(low, optimal_spectrum(10, 10, 0.05));
    c.near(shear_and_stress(dr, 1e-6, low.eta).shear_rate, 30, 0.3, "shear_dragged");
    c.near(shear_and_stress(bd, 1e-6, low.eta).shear_rate, 40, 0.3, "shear_tangential");
    c.near(shear_and_stress(os, 1e-6, low.eta).shear_rate, 3, 0.3, "shear_oscillating");
    const double a = low.a;
    const double s_dr = decay_exponent(dr, 10 * a, 100 * a), s_bd = decay_exponent(bd, 10 * a, 100 * a),
                 s_os = decay_exponent(os, 10 * a, 100 * a);
    c.note(fmt("slopes=%.3f", s_dr) + fmt("/%.3f", s_bd) + fmt("/%.3f", s_os));
    c.expect(std::abs(s_dr + 1.0) <= 0.05, "dragged slope");
    c.expect(s_bd <= -2.0, "tangential slope");
    c.expect(s_os <= -2.0, "oscillating slope");
    report(7, "fluid disturbance", c);
}

void brownian_check() {
    Check c;
    const double d = 100e-6;
    const auto l = brownian_record(1e-6, low.eta, low.T_body, low.U);
    const auto h = brownian_record(1e-6, high.eta, high.T_body, high.U);
    c.near(l.D, 2e-13, 0.1, "D_low");
    c.near(h.D, 2e-17, 0.1, "D_high");
    c.near(rms_displacement(l.D, d / low.U), 1e-6, 0.1, "rms_low");
    c.near(rms_displacement(h.D, d / high.U), 0.1e-6, 0.1, "rms_high");
    c.near(l.tau, 3.0, 0.1, "tau_low");
    c.near(h.tau, 8 * 3600.0, 0.1, "tau_high");
    c.near(low.U * l.tau, 300e-6, 0.1, "Utau_low");
    c.near(high.U * h.tau, 30e-3, 0.1, "Utau_high");
    c.near(l.D_m, 1e-8, 0.1, "Dm_low");
    c.near(h.D_m, 1e-8, 0.1, "Dm_high");
    double worst = 0.0;
    for (const Scenario& s : {low, high}) {
        for (double a : {0.3e-6, 1e-6, 7e-6}) {
            const double x = translational_diffusion(a, s.eta, s.T_body) * orientation_time(a, s.eta, s.T_body);
            worst = std::max(worst, std::abs(x / (2.0 / 3.0 * a * a) - 1));
        }
    }
    c.note(fmt("Dtau_err=%.1e", worst));
    c.expect(worst <= 1e-12, "D tau identity");
    report(8, "Brownian motion of the sphere", c);
}

void bem_check() {
    Check c;
    const SpheroidShape sphere{1e-6, 1e-6};
    const double F = drag_translation(sphere, low.eta, low.U, {256});
    c.near(F, stokes_drag(1e-6, low.eta, low.U), 0.01, "drag");
    const auto profile = band_profile(210e-6, pi / 3, 2 * pi / 3);
    const auto r = band_performance({pi / 3, 210e-6}, low);
    const auto sol = solve_swim(sphere, profile, low.eta, {256});
    c.near(sol.rigid_velocity, r.U, 0.02, "U_band");
    c.near(sol.power, r.P_propel, 0.02, "P_band");
    const double F2 = drag_translation(sphere, low.eta, low.U, {512});
    const auto sol2 = solve_swim(sphere, profile, low.eta, {512});
    const double dF = std::abs(F2 / F - 1), dU = std::abs(sol2.rigid_velocity / sol.rigid_velocity - 1);
    c.note(fmt("refine_dF=%.1e", dF) + fmt(" refine_dU=%.1e", dU) +
           fmt(" refine_dP=%.1e", std::abs(sol2.power / sol.power - 1)));
    c.expect(dF < 0.005, "drag refinement");
    c.expect(dU < 0.005, "speed refinement");
    report(9, "boundary element validation", c);
}

void shape_sweep_check() {
    Check c;
    const GeometryConstraints g;
    const auto bs = reports::b_grid(0.35e-6, 1e-6, 14);
    const auto sweep = shape_sweep(bs, low, g, {256});
    // bs runs from the sphere down
    bool decreasing = true;
    for (std::size_t i = 1; i < bs.size(); ++i)
        if (bs[i] >= 0.5e-6 * (1 - 1e-12) && !(sweep[i].P_propel_rel < sweep[i - 1].P_propel_rel)) decreasing = false;
    c.expect(decreasing, "P_propel decreasing over b in [0.5, 1] um");
    std::size_t imin = 0;
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (sweep[i].P_total_rel < sweep[imin].P_total_rel) imin = i;
    c.note(fmt("P_total_min=%.3f", sweep[imin].P_total_rel) + fmt(" at b=%.3gum", bs[imin] * 1e6) +
           fmt(" P_total(b_min)=%.3f", sweep.back().P_total_rel));
    c.expect(imin > 0 && imin + 1 < bs.size(), "interior minimum");
    c.expect(sweep.back().P_total_rel > sweep[imin].P_total_rel, "increase for small b");
    double worst = 0.0;
    for (const auto& r : sweep) {
        const auto geo = spheroid_geometry(r.design.shape);
        worst = std::max(worst, std::abs((geo.S - r.design.S_p) / g.S_np_min - 1));
        worst = std::max(worst, std::abs((geo.V - 2 * g.r_bearing * r.design.S_p) / g.V_np_min - 1));
    }
    c.note(fmt("constraint_err=%.1e", worst));
    c.expect(worst <= 1e-6, "active constraints");
    report(10, "constrained spheroid sweep", c);
}

void brownian_sweep_check() {
    Check c;
    const double alpha = 20 * pi / 180;
    const auto pts =
        brownian_shape_sweep(reports::b_grid(0.35e-6, 1e-6, 14), GeometryConstraints{}, 20e-6, alpha, low.eta, low.T_body);
    const double analytic = dead_reckoning_speed(20e-6, orientation_time(1e-6, low.eta, low.T_body), alpha);
    c.near(pts.front().U_required, analytic, 0.05, "U_sphere");
    c.near(pts.front().U_required, 56e-6, 0.05, "U_sphere_vs_56");
    bool dec = true;
    for (std::size_t i = 1; i < pts.size(); ++i) dec = dec && pts[i].U_required < pts[i - 1].U_required;
    c.expect(dec, "strictly decreasing");
    report(11, "dead-reckoning speed against shape", c);
}

void tradeoff_check() {
    Check c;
    const ConstraintSet cs;
    const ReferenceDesigns ref;
    const auto Us = log_range(1e-6, 1e-2, 41), etas = log_range(1e-3, 10.0, 41);
    for (auto [U, eta] : {std::pair{100e-6, 1e-3}, std::pair{1e-6, 10.0}})
        c.expect(ref.evaluate(Method::OSCILLATING, U, eta, cs).all_pass(), "scenario point passes (oscillating)");
    for (Method m : {Method::TANGENTIAL, Method::OSCILLATING}) {
        const auto g = feasibility_grid(Us, etas, m, cs, ref);
        bool mono = true;
        for (std::size_t e = 0; e < etas.size(); ++e)
            for (std::size_t u = 0; u < Us.size(); ++u)
                for (int k : {POWER, STRESS}) {
                    if (!g.at(e, u).pass[k]) continue;
                    if (u > 0 && !g.at(e, u - 1).pass[k]) mono = false;
                    if (e > 0 && !g.at(e - 1, u).pass[k]) mono = false;
                }
        c.expect(mono, to_string(m) + " boundaries monotone");
    }
    // internal share above 10% must stay in the high-speed, low-viscosity quarter
    const auto g = feasibility_grid(Us, etas, Method::TANGENTIAL, cs, ref);
    int inside = 0, outside = 0;
    for (const auto& cell : g.cells) {
        if (cell.internal_fraction() <= 0.1) continue;
        (cell.U >= 1e-4 && cell.eta <= 0.1 ? inside : outside)++;
    }
    c.note("internal>10%: " + std::to_string(inside) + " cells in corner, " + std::to_string(outside) + " outside");
    c.note(fmt("(share at eta=1e-3: %.2f,", g.at(0, 0).internal_fraction()) +
           fmt(" independent of U: %.2f)", g.at(0, Us.size() - 1).internal_fraction()));
    c.expect(inside > 0 && outside == 0, "internal share confined to the corner");
    report(12, "constraint map", c);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

void determinism_check(const std::string& cli) {
    Check c;
    const auto dir = std::filesystem::temp_directory_path() / "microbot_acceptance";
    std::filesystem::create_directories(dir);
    const std::vector<std::string> cmds = {
        "table1", "table2", "table3", "table4", "table4-osc", "table5", "table6", "brownian", "tangential",
        "oscillation", "fieldscan", "fig8", "shape-sweep", "fig7", "brownian-sweep", "fig10", "tradeoff", "fig11"};
    int identical = 0;
    for (const auto& cmd : cmds) {
        // the constraint map spans both scenarios
        const bool whole_plane = cmd == "tradeoff" || cmd == "fig11";
        for (const char* sc : {"low", "high"}) {
            std::string out[2];
            bool ran = true;
            for (int k = 0; k < 2; ++k) {
                const auto path = dir / (cmd + "_" + sc + "_" + std::to_string(k) + ".csv");
                const std::string scenario = whole_plane ? "" : std::string(" --scenario ") + sc;
                const std::string line = "\"" + cli + "\" " + cmd + scenario + " --out \"" + path.string() + "\"";
                ran = ran && std::system(line.c_str()) == 0;
                out[k] = slurp(path);
            }
            c.expect(ran, cmd + " " + sc + " ran");
            const bool same = ran && !out[0].empty() && out[0] == out[1];
            c.expect(same, cmd + " " + sc + " identical");
            identical += same;
            if (whole_plane) break;
        }
    }
    c.note(std::to_string(identical) + " runs compared byte-identical");
    report(13, "output determinism", c);
}

void friction_check() {
    Check c;
    const double v_lo = required_band_speed(low.U, pi / 3), v_hi = required_band_speed(high.U, pi / 3);
    const double tl = sliding_friction_power({}, TreadmillDesign{}.sliding_area, v_lo);
    const double th = sliding_friction_power({}, TreadmillDesign{}.sliding_area, v_hi);
    c.near(tl, 1e-15, 0.3, "treadmill_low");
    const auto spec = normalize_spectrum(optimal_spectrum(10, 10, 0.05), 1e-6);
    const auto k = oscillation_coefficients(spec);
    const auto rods = rod_array_for_modes(spec.n_max(), 1e-6, 50e-9, 0.05e-6);
    auto rod_power = [&](const Scenario& s) {
        const double w = omega_for_speed(k, s.a, 0.05, s.U);
        return sliding_friction_power({1000, Duty::SINUSOIDAL}, rods.sliding_area, s.a * 0.05 * w);
    };
    c.near(rod_power(low), 8e-15, 0.3, "rods_low");
    c.near(tl / th, 1e4, 1e-9, "treadmill_v2_ratio");
    c.near(rod_power(low) / rod_power(high), 1e4, 1e-9, "rods_v2_ratio");
    report(14, "internal friction", c);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <microbot_cli>\n");
        return 2;
    }
    scenario_quantities();
    band_performance_check();
    rotation_check();
    treadmill_check();
    quasistatic_check();
    oscillation_check();
    disturbance_check();
    brownian_check();
    bem_check();
    shape_sweep_check();
    brownian_sweep_check();
    tradeoff_check();
    determinism_check(argv[1]);
    friction_check();

    int unexpected = 0;
    std::string list;
    for (int id : failed) {
        list += " " + std::to_string(id);
        if (!known_deviations.count(id)) ++unexpected;
    }
    for (int id : known_deviations) {
        if (std::find(failed.begin(), failed.end(), id) == failed.end()) {
            std::printf("NOTE criterion %d is listed as a known deviation but passed\n", id);
        }
    }
    std::printf("SUMMARY %zu/14 PASS; failed:%s; unexpected failures: %d\n", 14 - failed.size(),
                list.empty() ? " none" : list.c_str(), unexpected);
    return unexpected == 0 ? 0 : 1;
}
