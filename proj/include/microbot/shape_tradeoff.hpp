#pragma once

#include <cmath>
#include <vector>

#include "actuator_models.hpp"
#include "brownian_nav.hpp"
#include "numerics/roots.hpp"
#include "parallel.hpp"
#include "scenario.hpp"
#include "stokes_bem.hpp"

namespace microbot {

struct SpheroidGeometry {
    double V;  ///< [m^3]
    double S;  ///< [m^2]
};

/// Volume and area budget for everything except propulsion.
struct GeometryConstraints {
    double V_np_min = 4.0 * pi / 3.0 * 1e-18 - 2.0 * 50e-9 * 2.0 * pi * 1e-12;  ///< unit sphere value, ~3.56 um^3
    double S_np_min = 2.0 * pi * 1e-12;                                        ///< half the unit sphere, ~6.28 um^2
    double r_bearing = 50e-9;
    double b_min = 0.3e-6;
};

struct ConstrainedDesign {
    SpheroidShape shape;
    double S_p = 0.0;       ///< propulsion band area [m^2]
    double t_lo = 0.0;      ///< band edges as generatrix parameters, x = a cos t
    double t_hi = 0.0;
    double v = 0.0;         ///< tread speed [m/s]
    double P_propel = 0.0;  ///< [W]
    double P_internal = 0.0;
    double P_total() const { return P_propel + P_internal; }
};

/// Design values divided by the sphere design's values.
struct RelativeDesign {
    ConstrainedDesign design;
    double v_rel = 0.0;
    double P_propel_rel = 0.0;
    double P_total_rel = 0.0;
};

struct BrownianShapePoint {
    SpheroidShape shape;
    double tau = 0.0;         ///< [s]
    double U_required = 0.0;  ///< [m/s]
};

inline SpheroidGeometry spheroid_geometry(const SpheroidShape& s) {
    validate(s);
    const double a = s.a, b = s.b;
    const double V = 4.0 * pi / 3.0 * a * b * b;
    const double e2 = 1.0 - (b * b) / (a * a);
    double ratio;  // asin(e)/e
    if (e2 < 1e-8) {
        ratio = 1.0 + e2 / 6.0;
    } else {
        const double e = std::sqrt(e2);
        ratio = std::asin(e) / e;
    }
    return {V, 2.0 * pi * b * b * (1.0 + a / b * ratio)};
}

namespace detail {

// Area of the zone |x| <= X on a prolate spheroid.
inline double zone_area(const SpheroidShape& s, double X) {
    const double a = s.a, b = s.b;
    const double e = std::sqrt(std::max(0.0, 1.0 - (b * b) / (a * a)));
    const double q = e * X / a;
    const double asin_term = e < 1e-8 ? X : a / e * std::asin(q);
    return 2.0 * pi * b * (X * std::sqrt(1.0 - q * q) + asin_term);
}

inline double volume_slack(const SpheroidShape& s, const GeometryConstraints& c) {
    const auto g = spheroid_geometry(s);
    return g.V - 2.0 * c.r_bearing * (g.S - c.S_np_min) - c.V_np_min;
}

}  // namespace detail

inline void validate(const GeometryConstraints& c) {
    detail::require_positive(c.V_np_min, "V_np_min");
    detail::require_positive(c.S_np_min, "S_np_min");
    detail::require_nonnegative(c.r_bearing, "r_bearing");
    detail::require_positive(c.b_min, "b_min");
}

/**
 * @brief Shortest spheroid with semi-minor axis b meeting the volume and area budgets.
 *
 * All area beyond S_np_min becomes an equatorial band.
 */
inline ConstrainedDesign constrained_shape(double b, const GeometryConstraints& c) {
    validate(c);
    if (!(b >= c.b_min)) throw InvalidParameter("semi-minor axis below b_min");
    auto slack = [&](double a) { return detail::volume_slack({a, b}, c); };
    double a = b;
    if (slack(b) < 0.0) {
        if (slack(100.0 * b) < 0.0) {
            throw InfeasibleError("no semi-major axis in [b, 100 b] meets the volume budget for b = " +
                                  detail::fmt(b));
        }
        a = numerics::bisect(slack, b, 100.0 * b, 1e-14);
        // land on the feasible side
        while (slack(a) < 0.0) a = std::nextafter(a, 2.0 * a);
    }
    ConstrainedDesign d;
    d.shape = {a, b};
    const auto g = spheroid_geometry(d.shape);
    d.S_p = g.S - c.S_np_min;
    if (d.S_p <= 0.0) throw InfeasibleError("no surface left for propulsion at b = " + detail::fmt(b));
    const double X = numerics::bisect([&](double x) { return detail::zone_area(d.shape, x) - d.S_p; }, 0.0, a, 1e-15);
    d.t_lo = std::acos(std::min(1.0, X / a));
    d.t_hi = pi - d.t_lo;
    return d;
}

/// Band design solved for speed U with the BEM; powers filled in.
inline ConstrainedDesign solve_design(ConstrainedDesign d, const Scenario& scenario, const BemOptions& opt,
                                      const FrictionModel& friction = {}) {
    const auto unit = solve_swim(d.shape, band_profile(1.0, d.t_lo, d.t_hi), scenario.eta, opt);
    if (!(unit.rigid_velocity > 0.0)) throw NumericalError("band design produced no forward motion");
    // speed and power are linear and quadratic in v
    d.v = scenario.U / unit.rigid_velocity;
    d.P_propel = unit.power * d.v * d.v;
    d.P_internal = sliding_friction_power(friction, treadmill_sliding_area(d.S_p), d.v);
    return d;
}

/**
 * @brief Constrained band designs over b, relative to the design at b = b_sphere.
 */
inline std::vector<RelativeDesign> shape_sweep(const std::vector<double>& b_range, const Scenario& scenario,
                                               const GeometryConstraints& c, const BemOptions& opt = {},
                                               unsigned threads = 1, double b_sphere = 1e-6) {
    for (double b : b_range) {
        if (!(b >= c.b_min)) throw InvalidParameter("semi-minor axis below b_min");
    }
    BemOptions inner = opt;
    inner.threads = 1;
    const ConstrainedDesign ref = solve_design(constrained_shape(b_sphere, c), scenario, inner);
    std::vector<RelativeDesign> out(b_range.size());
    parallel_for(b_range.size(), threads, [&](std::size_t i) {
        RelativeDesign r;
        r.design = solve_design(constrained_shape(b_range[i], c), scenario, inner);
        r.v_rel = r.design.v / ref.v;
        r.P_propel_rel = r.design.P_propel / ref.P_propel;
        r.P_total_rel = r.design.P_total() / ref.P_total();
        out[i] = r;
    });
    return out;
}

/// Dead-reckoning speed for each constrained shape.
inline std::vector<BrownianShapePoint> brownian_shape_sweep(const std::vector<double>& b_range,
                                                            const GeometryConstraints& c, double d,
                                                            double alpha_rms, double eta, double T) {
    std::vector<BrownianShapePoint> out;
    for (double b : b_range) {
        BrownianShapePoint p;
        p.shape = constrained_shape(b, c).shape;
        p.tau = spheroid_orientation_time(p.shape, eta, T);
        p.U_required = dead_reckoning_speed(d, p.tau, alpha_rms);
        out.push_back(p);
    }
    return out;
}

/// Energy to cover distance d at speed U with the band design of each shape [J].
inline std::vector<double> travel_energy(const std::vector<BrownianShapePoint>& pts, const GeometryConstraints& c,
                                         const Scenario& base, double d, const BemOptions& opt = {},
                                         unsigned threads = 1) {
    std::vector<double> E(pts.size());
    BemOptions inner = opt;
    inner.threads = 1;
    parallel_for(pts.size(), threads, [&](std::size_t i) {
        Scenario s = base;
        s.U = pts[i].U_required;
        const auto design = solve_design(constrained_shape(pts[i].shape.b, c), s, inner);
        E[i] = design.P_total() * d / s.U;
    });
    return E;
}

}  // namespace microbot
