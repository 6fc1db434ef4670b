#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "bem/mesh.hpp"
#include "bem/ring_kernels.hpp"
#include "parallel.hpp"
#include "scenario.hpp"
#include "squirmer_modes.hpp"

namespace microbot {

/// Prolate spheroid with semi-axis a along the symmetry axis, b across it.
struct SpheroidShape {
    double a = 1e-6;
    double b = 1e-6;

    bool is_sphere() const { return a == b; }
};

inline void validate(const SpheroidShape& s) {
    detail::require_positive(s.b, "semi-minor axis b");
    if (!(s.a >= s.b)) throw InvalidParameter("spheroid needs a >= b");
}

/// Tangential surface speed along the meridian (north to south positive) on a spheroid.
struct SurfaceProfile {
    std::function<double(double t)> speed;  ///< t is the generatrix parameter, x = a cos t
    std::vector<double> breaks;             ///< parameters where the speed may jump
};

struct BemOptions {
    int N = 256;           ///< element count
    unsigned threads = 1;  ///< assembly workers
};

struct BemSolution {
    std::vector<bem::Point2> traction;  ///< per element (axial, radial) [Pa]
    double rigid_velocity = 0.0;        ///< translation along the axis [m/s]
    double power = 0.0;                 ///< [W]
    double axial_force = 0.0;           ///< net axial force exerted by the fluid [N]
    bem::BemMesh mesh;                  ///< in units of the length scale below
    double length_scale = 1.0;          ///< [m]
};

namespace bem {

enum class Problem { SWIM, RESISTANCE };

// Velocities are given in scaled units on a scaled mesh (viscosity 1).
struct RawSolution {
    std::vector<Point2> traction;
    double U = 0.0;
};

inline double log_integral(double ta, double tb, double t0) {
    auto part = [](double h) { return h > 0.0 ? h * (std::log(h) - 1.0) : 0.0; };
    return part(tb - t0) + part(t0 - ta);
}

inline bool is_near(const Element& target, const Element& src) {
    const double dist = std::hypot(target.mid.x - src.mid.x, target.mid.sigma - src.mid.sigma);
    return dist < 3.0 * std::max(target.length, src.length);
}

/**
 * @brief Solve the boundary integral equation on an axisymmetric mesh.
 *
 * SWIM: surface velocity u_s relative to the body, unknown translation U
 * with zero net axial force. RESISTANCE: rigid translation U_given, u_s ignored.
 */
inline RawSolution solve(const BemMesh& mesh, const std::function<Point2(double)>& u_s, Problem problem,
                         double U_given, unsigned threads) {
    const int N = mesh.size();
    const int n_rows = 2 * N + (problem == Problem::SWIM ? 1 : 0);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_rows, n_rows);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_rows);
    const double inv8pi = 1.0 / (8.0 * pi);
    const double c_defl = 1.0 / mesh.total_area;

    // surface velocities at quadrature points, cached per element
    std::vector<std::vector<Point2>> w_near(N), w_far(N);
    std::vector<Point2> w_mid(N);
    if (problem == Problem::SWIM) {
        for (int j = 0; j < N; ++j) {
            const Element& e = mesh.elements[j];
            for (const auto& q : e.near) w_near[j].push_back(u_s(q.t));
            for (const auto& q : e.far) w_far[j].push_back(u_s(q.t));
            w_mid[j] = u_s(e.tm);
        }
    }

    parallel_for(N, threads, [&](std::size_t ii) {
        const int i = static_cast<int>(ii);
        const Element& ti = mesh.elements[i];
        const double x0 = ti.mid.x, s0 = ti.mid.sigma;
        const Point2 w0 = problem == Problem::SWIM ? w_mid[i] : Point2{};
        double dl[2] = {0.0, 0.0};
        for (int j = 0; j < N; ++j) {
            const Element& ej = mesh.elements[j];
            const bool self = i == j;
            const bool near = self || is_near(ti, ej);
            const auto& pts = near ? ej.near : ej.far;
            const auto& wv = near ? w_near[j] : w_far[j];
            Mat2 S{};
            for (std::size_t k = 0; k < pts.size(); ++k) {
                const QuadPoint& q = pts[k];
                const double X = x0 - q.y.x;
                const RingMoments I = ring_moments(X, s0, q.y.sigma);
                const Mat2 s = single_layer_m0(X, s0, q.y.sigma, I);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) S[a][b] += s[a][b] * q.weight;
                if (self) {
                    // remove the -2 ln|t - t0| J(t0) part, integrated exactly below
                    const double sing = 2.0 * std::log(std::abs(q.t - ti.tm)) * ti.jac_mid * q.dt;
                    S[0][0] += sing;
                    S[1][1] += sing;
                }
                if (problem == Problem::SWIM) {
                    // subtract the target velocity as a constant vector, not as a ring field
                    const double dux = wv[k].x - w0.x;
                    if (dux != 0.0 || wv[k].sigma != 0.0 || w0.sigma != 0.0) {
                        std::array<double, 2> Dy{};
                        const Mat2 D = double_layer_m0(X, s0, q.y.sigma, q.normal.x, q.normal.sigma, I, &Dy);
                        for (int a = 0; a < 2; ++a)
                            dl[a] += (D[a][0] * dux + D[a][1] * wv[k].sigma - Dy[a] * w0.sigma) * q.weight;
                    }
                }
            }
            if (self) {
                const double sing = -2.0 * ti.jac_mid * log_integral(ej.ta, ej.tb, ti.tm);
                S[0][0] += sing;
                S[1][1] += sing;
            }
            const double nvec[2] = {ej.normal_area.x, ej.normal_area.sigma};
            const double n0[2] = {ti.normal.x, ti.normal.sigma};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) A(2 * i + a, 2 * j + b) = -inv8pi * S[a][b] + c_defl * n0[a] * nvec[b];
        }
        if (problem == Problem::SWIM) {
            A(2 * i, 2 * N) = -1.0;
            rhs(2 * i) = w0.x - inv8pi * dl[0];
            rhs(2 * i + 1) = w0.sigma - inv8pi * dl[1];
        } else {
            rhs(2 * i) = U_given;
        }
    });
    if (problem == Problem::SWIM) {
        for (int j = 0; j < N; ++j) A(2 * N, 2 * j) = mesh.elements[j].area / mesh.total_area;
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rc = lu.rcond();
    if (!(rc > 1e-14)) {
        throw NumericalError("BEM system singular (rcond " + microbot::detail::fmt(rc) + ", " + std::to_string(N) +
                             " elements, total length " + microbot::detail::fmt(mesh.total_length) + ")");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    if (!sol.allFinite()) throw NumericalError("BEM solve produced non-finite values");
    RawSolution out;
    out.traction.resize(N);
    for (int j = 0; j < N; ++j) out.traction[j] = {sol(2 * j), sol(2 * j + 1)};
    out.U = problem == Problem::SWIM ? sol(2 * N) : U_given;
    return out;
}

// Net axial force and power -\oint u_s . f dS on a scaled mesh.
inline double axial_force(const BemMesh& mesh, const RawSolution& s) {
    double F = 0.0;
    for (int j = 0; j < mesh.size(); ++j) F += s.traction[j].x * mesh.elements[j].area;
    return F;
}

inline double surface_power(const BemMesh& mesh, const RawSolution& s, const std::function<Point2(double)>& u) {
    double P = 0.0;
    for (int j = 0; j < mesh.size(); ++j) {
        for (const auto& q : mesh.elements[j].near) {
            const Point2 w = u(q.t);
            P -= (w.x * s.traction[j].x + w.sigma * s.traction[j].sigma) * 2.0 * pi * q.y.sigma * q.weight;
        }
    }
    return P;
}

/**
 * @brief Transverse rigid motion (first azimuthal harmonic), single layer only.
 *
 * Prescribed velocity components (U_x, U_sig, U_phi) at parameter t.
 * Returns traction amplitudes (F_x, F_sig, F_phi) per element.
 */
inline std::vector<std::array<double, 3>> solve_m1(const BemMesh& mesh,
                                                   const std::function<std::array<double, 3>(Point2)>& u,
                                                   unsigned threads) {
    const int N = mesh.size();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3 * N, 3 * N);
    Eigen::VectorXd rhs(3 * N);
    const double inv8pi = 1.0 / (8.0 * pi);
    const double log_coef[3] = {2.0, 2.0, 4.0};
    parallel_for(N, threads, [&](std::size_t ii) {
        const int i = static_cast<int>(ii);
        const Element& ti = mesh.elements[i];
        const double x0 = ti.mid.x, s0 = ti.mid.sigma;
        for (int j = 0; j < N; ++j) {
            const Element& ej = mesh.elements[j];
            const bool self = i == j;
            const auto& pts = (self || is_near(ti, ej)) ? ej.near : ej.far;
            Mat3 S{};
            for (const QuadPoint& q : pts) {
                const double X = x0 - q.y.x;
                const Mat3 k = single_layer_m1(X, s0, q.y.sigma, ring_moments(X, s0, q.y.sigma));
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) S[a][b] += k[a][b] * q.weight;
                if (self) {
                    const double l = std::log(std::abs(q.t - ti.tm)) * ti.jac_mid * q.dt;
                    for (int a = 0; a < 3; ++a) S[a][a] += log_coef[a] * l;
                }
            }
            if (self) {
                const double l = ti.jac_mid * log_integral(ej.ta, ej.tb, ti.tm);
                for (int a = 0; a < 3; ++a) S[a][a] -= log_coef[a] * l;
            }
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) A(3 * i + a, 3 * j + b) = -inv8pi * S[a][b];
        }
        const auto ui = u(ti.mid);
        for (int a = 0; a < 3; ++a) rhs(3 * i + a) = ui[a];
    });
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    if (!(lu.rcond() > 1e-14)) throw NumericalError("BEM transverse system singular");
    const Eigen::VectorXd sol = lu.solve(rhs);
    std::vector<std::array<double, 3>> F(N);
    for (int j = 0; j < N; ++j) F[j] = {sol(3 * j), sol(3 * j + 1), sol(3 * j + 2)};
    return F;
}

}  // namespace bem

namespace detail {

inline bem::BemMesh scaled_spheroid_mesh(const SpheroidShape& s, int N, const std::vector<double>& breaks = {}) {
    validate(s);
    if (N < 16) throw InvalidParameter("BEM mesh needs N >= 16");
    return bem::make_mesh(bem::spheroid_generatrix(s.a / s.a, s.b / s.a), N, breaks);
}

}  // namespace detail

/**
 * @brief Drag on a spheroid translating along its axis at speed U.
 * @return Drag force magnitude [N]
 */
inline double drag_translation(const SpheroidShape& shape, double eta, double U, const BemOptions& opt = {}) {
    detail::require_positive(eta, "viscosity eta");
    detail::require_nonnegative(U, "speed U");
    const auto mesh = detail::scaled_spheroid_mesh(shape, opt.N);
    const auto raw = bem::solve(mesh, {}, bem::Problem::RESISTANCE, 1.0, opt.threads);
    // scaled force per unit speed, viscosity and length
    return -bem::axial_force(mesh, raw) * eta * U * shape.a;
}

/**
 * @brief Swimming speed, traction and power of a force-free spheroid with tangential surface motion.
 */
inline BemSolution solve_swim(const SpheroidShape& shape, const SurfaceProfile& profile, double eta,
                              const BemOptions& opt = {}) {
    detail::require_positive(eta, "viscosity eta");
    const double L = shape.a;
    const auto mesh = detail::scaled_spheroid_mesh(shape, opt.N, profile.breaks);
    const auto& g = mesh.generatrix;
    // speeds in m/s on a mesh in units of L; viscosity scaled out
    auto u = [&](double t) {
        const double v = profile.speed(t);
        const bem::Point2 d = g.tangent(t);
        const double j = std::hypot(d.x, d.sigma);
        return bem::Point2{v * d.x / j, v * d.sigma / j};
    };
    const auto raw = bem::solve(mesh, u, bem::Problem::SWIM, 0.0, opt.threads);
    BemSolution out;
    out.rigid_velocity = raw.U;
    out.traction.resize(raw.traction.size());
    for (std::size_t j = 0; j < raw.traction.size(); ++j) {
        out.traction[j] = {raw.traction[j].x * eta / L, raw.traction[j].sigma * eta / L};
    }
    out.axial_force = bem::axial_force(mesh, raw) * eta * L;
    out.power = bem::surface_power(mesh, raw, u) * eta * L;
    out.mesh = mesh;
    out.length_scale = L;
    return out;
}

/// Band on a spheroid: constant speed v between parameters t_lo and t_hi.
inline SurfaceProfile band_profile(double v, double t_lo, double t_hi) {
    SurfaceProfile p;
    p.speed = [=](double t) { return (t >= t_lo && t <= t_hi) ? v : 0.0; };
    p.breaks = {t_lo, t_hi};
    return p;
}

/// Rotational friction coefficient about a transverse axis [N m s].
inline double rotational_drag_transverse(const SpheroidShape& shape, double eta, const BemOptions& opt = {}) {
    detail::require_positive(eta, "viscosity eta");
    const auto mesh = detail::scaled_spheroid_mesh(shape, opt.N);
    // unit rotation about a transverse axis: u = -sigma cos(phi) e_x + x cos(phi) e_sig - x sin(phi) e_phi
    const auto F = bem::solve_m1(
        mesh, [](bem::Point2 p) { return std::array<double, 3>{-p.sigma, p.x, -p.x}; }, opt.threads);
    double T = 0.0;
    for (int j = 0; j < mesh.size(); ++j) {
        for (const auto& q : mesh.elements[j].near) {
            T += pi * q.y.sigma * (q.y.x * (F[j][1] - F[j][2]) - q.y.sigma * F[j][0]) * q.weight;
        }
    }
    const double L = shape.a;
    return -T * eta * L * L * L;
}

/// Drag for translation across the symmetry axis [N], from the same transverse solver.
inline double drag_transverse(const SpheroidShape& shape, double eta, double U, const BemOptions& opt = {}) {
    const auto mesh = detail::scaled_spheroid_mesh(shape, opt.N);
    const auto F = bem::solve_m1(
        mesh, [](bem::Point2) { return std::array<double, 3>{0.0, 1.0, -1.0}; }, opt.threads);
    double Fy = 0.0;
    for (int j = 0; j < mesh.size(); ++j) {
        for (const auto& q : mesh.elements[j].near) Fy += pi * q.y.sigma * (F[j][1] - F[j][2]) * q.weight;
    }
    return -Fy * eta * U * shape.a;
}

namespace detail {

// Deformed sphere at time t in units of a; velocities in units of a*eps*omega.
struct DeformedBody {
    bem::Generatrix generatrix;
    std::function<bem::Point2(double)> velocity;
};

inline DeformedBody deformed_body(const ModeSpectrum& spec, double t) {
    const double tau = spec.omega * t, eps = spec.epsilon;
    const int nm = spec.n_max();
    struct Amp {
        int n;
        double al, be, dal, dbe;
    };
    std::vector<Amp> amps;
    for (const Mode& m : spec.modes) {
        amps.push_back({m.n, m.A * std::cos(tau - m.gamma), m.B * std::cos(tau - m.eta),
                        -m.A * std::sin(tau - m.gamma), -m.B * std::sin(tau - m.eta)});
    }
    auto sums = [=](double vt) {
        const auto tab = numerics::legendre_table(nm, std::cos(vt));
        std::array<double, 6> s{};  // alpha P, beta V, d/dt of both, d/dvartheta of both
        for (const Amp& a : amps) {
            s[0] += a.al * tab.P[a.n];
            s[1] += a.be * tab.V[a.n];
            s[2] += a.dal * tab.P[a.n];
            s[3] += a.dbe * tab.V[a.n];
            s[4] += a.al * (a.n + 1.0) * tab.V[a.n];
            s[5] += a.be * tab.dV[a.n];
        }
        return s;
    };
    DeformedBody body;
    body.generatrix.point = [=](double vt) {
        const auto s = sums(vt);
        const double r = 1.0 + eps * s[0], th = vt + eps * s[1];
        return bem::Point2{r * std::cos(th), r * std::sin(th)};
    };
    body.generatrix.tangent = [=](double vt) {
        const auto s = sums(vt);
        const double r = 1.0 + eps * s[0], th = vt + eps * s[1];
        const double dr = eps * s[4], dth = 1.0 + eps * s[5];
        return bem::Point2{dr * std::cos(th) - r * dth * std::sin(th), dr * std::sin(th) + r * dth * std::cos(th)};
    };
    body.velocity = [=](double vt) {
        const auto s = sums(vt);
        const double r = 1.0 + eps * s[0], th = vt + eps * s[1];
        const double vr = s[2], vtan = r * s[3];  // per a eps omega
        return bem::Point2{vr * std::cos(th) - vtan * std::sin(th), vr * std::sin(th) + vtan * std::cos(th)};
    };
    // reject folded or inverted meridians
    for (int i = 0; i <= 720; ++i) {
        const double vt = pi * i / 720.0;
        const auto s = sums(vt);
        if (1.0 + eps * s[0] <= 0.0 || 1.0 + eps * s[5] <= 0.0) {
            throw GeometryError("deformed surface self-intersects at rest angle " + detail::fmt(vt) +
                                "; epsilon too large");
        }
    }
    return body;
}

}  // namespace detail

/// Swimming speed of the deforming body at time t from one quasi-static BEM solve [m/s].
inline double oscillation_instant_speed(const ModeSpectrum& spec, double a, double t, const BemOptions& opt = {}) {
    const auto body = detail::deformed_body(spec, t);
    const auto mesh = bem::make_mesh(body.generatrix, opt.N);
    const auto raw = bem::solve(mesh, body.velocity, bem::Problem::SWIM, 0.0, opt.threads);
    return raw.U * a * spec.epsilon * spec.omega;
}

/**
 * @brief Mean swimming speed of an oscillating sphere by direct time stepping.
 *
 * Quasi-static: each step solves the swim problem on the instantaneous
 * deformed body; the mean is net displacement over elapsed time.
 */
inline double swim_oscillation_oracle(const ModeSpectrum& spec, double a, const Scenario& scenario, int n_periods,
                                      const BemOptions& opt = {}, int steps_per_period = 64) {
    if (!spec.normalized) throw InvalidState("oscillation oracle needs a normalized spectrum");
    detail::require_positive(a, "radius a");
    if (n_periods < 1) throw InvalidParameter("n_periods must be >= 1");
    (void)scenario;  // Stokes flow: the mean speed does not depend on viscosity
    if (spec.epsilon == 0.0 || spec.omega == 0.0) return 0.0;
    const double period = 2.0 * pi / spec.omega;
    const int steps = n_periods * steps_per_period;
    const double dt = period / steps_per_period;
    double displacement = 0.0;
    for (int k = 0; k < steps; ++k) displacement += oscillation_instant_speed(spec, a, k * dt, opt) * dt;
    return displacement / (steps * dt);
}

/// Mesh and traction as CSV rows for debugging.
inline void write_bem_diagnostics(std::ostream& os, const BemSolution& s) {
    os << "element,t_a,t_b,x_m,sigma_m,length_m,area_m2,f_axial_Pa,f_radial_Pa\n";
    const double L = s.length_scale;
    for (int j = 0; j < s.mesh.size(); ++j) {
        const auto& e = s.mesh.elements[j];
        os << j << ',' << e.ta << ',' << e.tb << ',' << e.mid.x * L << ',' << e.mid.sigma * L << ','
           << e.length * L << ',' << e.area * L * L << ',' << s.traction[j].x << ',' << s.traction[j].sigma << '\n';
    }
}

}  // namespace microbot
