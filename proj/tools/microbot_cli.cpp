// Command-line front end: tables and figure datasets as CSV or JSON.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>

#include <microbot.hpp>
#include <microbot/io/config.hpp>
#include <microbot/io/json_io.hpp>
#include <microbot/io/table.hpp>
#include <microbot/reports.hpp>

using namespace microbot;

namespace {

constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

struct Common {
    std::string scenario = "low";
    std::string out;
    std::string format = "csv";
    unsigned threads = 1;
};

struct Output {
    io::Table table;
    std::optional<nlohmann::ordered_json> extra;  // appended as "summary" in JSON output
};

void emit(const Common& c, const Output& o) {
    std::string text;
    if (c.format == "json") {
        nlohmann::ordered_json j = io::to_json_value(o.table);
        if (o.extra) j["summary"] = *o.extra;
        text = j.dump(2) + "\n";
    } else {
        text = io::to_csv(o.table);
    }
    if (c.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        io::atomic_write(c.out, text);
    }
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Common& c,
                      bool with_scenario = true) {
    auto* sub = app.add_subcommand(name, help);
    if (with_scenario) {
        sub->add_option("--scenario", c.scenario, "low, high or file:<path> (key=value, SI units)")
            ->capture_default_str();
    }
    sub->add_option("--out", c.out, "output file (written atomically); stdout if omitted");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    return sub;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Micro-robot locomotion tables, sweeps and constraint maps"};
    app.require_subcommand(1);
    Common c;
    std::function<Output()> run;

    // tables
    auto* t1 = add_command(app, "table1", "scenario parameters, Reynolds number, drag", c);
    t1->callback([&] { run = [&] { return Output{reports::table1(io::resolve_scenario(c.scenario)), {}}; }; });

    double gamma_deg = 60.0;
    auto* t2 = add_command(app, "table2", "equatorial band performance (closed form and quadrature)", c);
    t2->add_option("--gamma", gamma_deg, "band angle [deg]")->capture_default_str();
    t2->callback([&] {
        run = [&] { return Output{reports::table2(io::resolve_scenario(c.scenario), gamma_deg * units::degree), {}}; };
    });

    double rot_v = 267e-6, turn_deg = 90.0;
    auto* t3 = add_command(app, "table3", "rotation by a cos(phi) band", c);
    t3->add_option("--v", rot_v, "max surface speed [m/s]")->capture_default_str();
    t3->add_option("--gamma", gamma_deg, "band angle [deg]")->capture_default_str();
    t3->add_option("--turn", turn_deg, "turn angle [deg]")->capture_default_str();
    t3->callback([&] {
        run = [&] {
            const Scenario s = io::resolve_scenario(c.scenario);
            return Output{reports::table3(s.a, rot_v, gamma_deg * units::degree, turn_deg * units::degree), {}};
        };
    });

    double wall = 100e-9, k_friction = 1000.0;
    std::string treadmill_json;
    auto* t4 = add_command(app, "table4", "treadmill structure, drag near a wall, sliding friction", c);
    t4->add_option("--wall-distance", wall, "tread to wall distance [m]")->capture_default_str();
    t4->add_option("--k-friction", k_friction, "friction coefficient [kg/(m^2 s)]")->capture_default_str();
    t4->add_option("--design", treadmill_json, "treadmill design JSON file");
    t4->callback([&] {
        run = [&] {
            TreadmillDesign d;
            if (!treadmill_json.empty()) {
                std::ifstream in(treadmill_json);
                if (!in) throw ConfigError("cannot open " + treadmill_json);
                nlohmann::ordered_json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw ConfigError(treadmill_json + ": " + e.what());
                }
                d = io::treadmill_from_json(j);
            }
            return Output{reports::table4(io::resolve_scenario(c.scenario), d, wall, pi / 3.0, {k_friction}), {}};
        };
    });

    double f_ref = 2000.0;
    auto* t4o = add_command(app, "table4-osc", "oscillation frequency and quasi-static criteria", c);
    t4o->add_option("--f-ref", f_ref, "frequency at 100 um/s [Hz]; scaled with U")->capture_default_str();
    t4o->callback([&] { run = [&] { return Output{reports::table4_osc(io::resolve_scenario(c.scenario), f_ref), {}}; }; });

    int k = 10, p = 10;
    double eps = 0.05;
    auto* t5 = add_command(app, "table5", "oscillating sphere performance", c);
    t5->add_option("--k", k, "lowest mode")->capture_default_str();
    t5->add_option("--p", p, "extra modes above k")->capture_default_str();
    t5->add_option("--epsilon", eps, "max displacement / a")->capture_default_str();
    t5->add_option("--k-friction", k_friction, "friction coefficient [kg/(m^2 s)]")->capture_default_str();
    t5->callback([&] {
        run = [&] {
            return Output{reports::table5(io::resolve_scenario(c.scenario), k, p, eps, {k_friction, Duty::SINUSOIDAL}),
                          {}};
        };
    });

    double travel = 100e-6;
    for (const char* name : {"table6", "brownian"}) {
        auto* t6 = add_command(app, name, "Brownian motion of the robot sphere", c);
        t6->add_option("--travel", travel, "distance for the rms displacement [m]")->capture_default_str();
        t6->callback([&] { run = [&] { return Output{reports::table6(io::resolve_scenario(c.scenario), travel), {}}; }; });
    }

    // free-form runs
    double U_target = -1.0;
    auto* tg = add_command(app, "tangential", "band actuation at any angle and speed", c);
    tg->add_option("--gamma", gamma_deg, "band angle [deg]")->capture_default_str();
    tg->add_option("--U", U_target, "target speed [m/s]; scenario speed if omitted");
    tg->callback([&] {
        run = [&] {
            Scenario s = io::resolve_scenario(c.scenario);
            if (U_target > 0.0) s.U = U_target;
            return Output{reports::table2(s, gamma_deg * units::degree), {}};
        };
    });

    std::string spectrum_file;
    auto* osc = add_command(app, "oscillation", "oscillating sphere for a (k, p) or JSON spectrum", c);
    osc->add_option("--k", k, "lowest mode")->capture_default_str();
    osc->add_option("--p", p, "extra modes above k")->capture_default_str();
    osc->add_option("--epsilon", eps, "max displacement / a")->capture_default_str();
    osc->add_option("--spectrum", spectrum_file, "spectrum JSON {epsilon, modes:[{n,A,B,gamma,eta}]}");
    osc->callback([&] {
        run = [&] {
            const Scenario s = io::resolve_scenario(c.scenario);
            ModeSpectrum spec = spectrum_file.empty() ? optimal_spectrum(k, p, eps) : io::load_spectrum(spectrum_file);
            spec = normalize_spectrum(spec, s.a);
            const auto co = oscillation_coefficients(spec);
            spec.omega = omega_for_speed(co, s.a, spec.epsilon, s.U);
            const auto perf = oscillation_performance(spec, s, &co);
            const auto q = quasistatic_validity(s, spec.omega);
            io::Table t{{{"quantity", ""}, {"value", ""}, {"unit", ""}}, {}};
            t.add({"epsilon", spec.epsilon, "1"});
            t.add({"angular_frequency", spec.omega, "rad/s"});
            t.add({"womersley_number", q.womersley, "1"});
            t.add({"damping_length", q.delta, "m"});
            t.add({"locomotion_speed", perf.U, "m/s"});
            t.add({"power", perf.P_propel, "W"});
            t.add({"efficiency", perf.efficiency, "1"});
            t.add({"thrust", perf.thrust, "N"});
            t.add({"C_U", co.C_U, "1"});
            t.add({"C_P", co.C_P, "1"});
            t.add({"C_eff", co.C_eff, "1"});
            t.add({"C_T", co.C_T, "1"});
            return Output{t, io::to_json(spec)};
        };
    });

    double d_min = 0.05, d_max = 100.0;
    int n_d = 41;
    auto* fs = add_command(app, "fieldscan", "speed, shear and stress against distance for the three motions", c);
    fs->add_option("--d-min", d_min, "smallest distance / a")->capture_default_str();
    fs->add_option("--d-max", d_max, "largest distance / a")->capture_default_str();
    fs->add_option("--n", n_d, "points (log spaced)")->check(CLI::Range(2, 10000))->capture_default_str();
    fs->callback([&] {
        run = [&] {
            return Output{reports::fieldscan(io::resolve_scenario(c.scenario), d_min, d_max, n_d, c.threads), {}};
        };
    });

    int n_fig8 = 61;
    auto* f8 = add_command(app, "fig8", "max fluid speed against distance, three motions", c);
    f8->add_option("--n", n_fig8, "points (log spaced in d/a from 0.05 to 100)")
        ->check(CLI::Range(2, 10000))
        ->capture_default_str();
    f8->callback([&] {
        run = [&] { return Output{reports::fig8(io::resolve_scenario(c.scenario), 0.05, 100.0, n_fig8, c.threads), {}}; };
    });

    // spheroid sweeps
    double b_lo = 0.35e-6, b_hi = 1e-6;
    int n_b = 14, n_elem = 256;
    auto add_sweep_flags = [&](CLI::App* sub) {
        sub->add_option("--b-min", b_lo, "smallest semi-minor axis [m]")->capture_default_str();
        sub->add_option("--b-max", b_hi, "largest semi-minor axis [m]")->capture_default_str();
        sub->add_option("--n", n_b, "number of shapes")->check(CLI::Range(2, 1000))->capture_default_str();
    };
    for (const char* name : {"shape-sweep", "fig7"}) {
        const bool fig = std::string(name) == "fig7";
        auto* ss = add_command(app, name, "constrained spheroids with equatorial treadmill bands", c);
        add_sweep_flags(ss);
        ss->add_option("--elements", n_elem, "BEM elements")->check(CLI::Range(64, 4096))->capture_default_str();
        ss->callback([&, fig] {
            run = [&, fig] {
                const Scenario s = io::resolve_scenario(c.scenario);
                const auto sweep = shape_sweep(reports::b_grid(b_lo, b_hi, n_b), s, GeometryConstraints{},
                                               BemOptions{n_elem, 1}, c.threads, s.a);
                return Output{reports::shape_sweep_table(sweep, fig), {}};
            };
        });
    }

    double nav_d = 20e-6, alpha_deg = 20.0;
    for (const char* name : {"brownian-sweep", "fig10"}) {
        const bool fig = std::string(name) == "fig10";
        auto* bs = add_command(app, name, "dead-reckoning speed for constrained spheroids", c);
        add_sweep_flags(bs);
        bs->add_option("--distance", nav_d, "travel distance [m]")->capture_default_str();
        bs->add_option("--alpha", alpha_deg, "allowed rms heading change [deg]")->capture_default_str();
        if (fig) bs->add_option("--elements", n_elem, "BEM elements")->check(CLI::Range(64, 4096))->capture_default_str();
        bs->callback([&, fig] {
            run = [&, fig] {
                const Scenario s = io::resolve_scenario(c.scenario);
                const GeometryConstraints g;
                const auto pts = brownian_shape_sweep(reports::b_grid(b_lo, b_hi, n_b), g, nav_d,
                                                      alpha_deg * units::degree, s.eta, s.T_body);
                if (!fig) return Output{reports::brownian_sweep_table(pts, nullptr), {}};
                const auto E = travel_energy(pts, g, s, nav_d, BemOptions{n_elem, 1}, c.threads);
                return Output{reports::brownian_sweep_table(pts, &E), {}};
            };
        });
    }

    // constraint maps
    std::string method = "both";
    double U_lo = 1e-6, U_hi = 1e-2, eta_lo = 1e-3, eta_hi = 10.0, P_max = 1e-12, stress_max = 1.0;
    int n_U = 41, n_eta = 41;
    std::string summary_path;
    for (const char* name : {"tradeoff", "fig11"}) {
        auto* tr = add_command(app, name, "power, stress and navigation constraints over (U, eta)", c, false);
        tr->add_option("--method", method, "propulsion method")
            ->check(CLI::IsMember({"both", "tangential", "oscillating"}))
            ->capture_default_str();
        tr->add_option("--U-min", U_lo, "[m/s]")->capture_default_str();
        tr->add_option("--U-max", U_hi, "[m/s]")->capture_default_str();
        tr->add_option("--eta-min", eta_lo, "[Pa s]")->capture_default_str();
        tr->add_option("--eta-max", eta_hi, "[Pa s]")->capture_default_str();
        tr->add_option("--nU", n_U, "speed points (log spaced)")->check(CLI::Range(2, 2000))->capture_default_str();
        tr->add_option("--neta", n_eta, "viscosity points (log spaced)")->check(CLI::Range(2, 2000))->capture_default_str();
        tr->add_option("--P-max", P_max, "power limit [W]")->capture_default_str();
        tr->add_option("--stress-max", stress_max, "stress limit at 1 um [Pa]")->capture_default_str();
        tr->add_option("--distance", nav_d, "dead-reckoning distance [m]")->capture_default_str();
        tr->add_option("--alpha", alpha_deg, "allowed rms heading change [deg]")->capture_default_str();
        tr->add_option("--summary", summary_path, "also write the JSON region summary here");
        tr->callback([&] {
            run = [&] {
                ConstraintSet cs;
                cs.P_max = P_max;
                cs.stress_max = stress_max;
                cs.nav_distance = nav_d;
                cs.alpha_rms = alpha_deg * units::degree;
                const ReferenceDesigns ref;
                const auto Us = log_range(U_lo, U_hi, n_U);
                const auto etas = log_range(eta_lo, eta_hi, n_eta);
                std::vector<FeasibilityGrid> grids;
                if (method != "oscillating") grids.push_back(feasibility_grid(Us, etas, Method::TANGENTIAL, cs, ref, c.threads));
                if (method != "tangential") grids.push_back(feasibility_grid(Us, etas, Method::OSCILLATING, cs, ref, c.threads));
                auto summary = reports::tradeoff_summary(grids);
                if (!summary_path.empty()) io::atomic_write(summary_path, summary.dump(2) + "\n");
                return Output{reports::tradeoff_table(grids), summary};
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        emit(c, run());
    } catch (const ConfigError& e) {
        std::cerr << "microbot_cli " << cmd << ": configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const InvalidParameter& e) {
        std::cerr << "microbot_cli " << cmd << ": invalid parameter: " << e.what() << "\n";
        return exit_config;
    } catch (const UnsupportedInput& e) {
        std::cerr << "microbot_cli " << cmd << ": unsupported input: " << e.what() << "\n";
        return exit_config;
    } catch (const NumericalError& e) {
        std::cerr << "microbot_cli " << cmd << ": numerical error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const GeometryError& e) {
        std::cerr << "microbot_cli " << cmd << ": geometry error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const InfeasibleError& e) {
        std::cerr << "microbot_cli " << cmd << ": infeasible design: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::exception& e) {
        std::cerr << "microbot_cli " << cmd << ": error: " << e.what() << "\n";
        return exit_numeric;
    }
    return 0;
}
