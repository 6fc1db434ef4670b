#pragma once

#include <array>
#include <cmath>

#include "../constants.hpp"
#include "../numerics/elliptic.hpp"

namespace microbot::bem {

/// Azimuthal moments I_{m,n} = \int_0^{2pi} cos^n(phi) r^{-m} dphi, r^2 = A - B cos(phi).
struct RingMoments {
    std::array<double, 3> I1{};  // m = 1, n = 0..2
    std::array<double, 4> I3{};  // m = 3, n = 0..3
    std::array<double, 4> I5{};  // m = 5, n = 0..3
};

/**
 * @brief Moments for a ring of radius sigma seen from a point at radius sigma0.
 *
 * X is the axial offset target - source. Far from the ring the integrand is
 * smooth and a periodic trapezoid rule converges geometrically; close to it
 * the moments are rebuilt from complete elliptic integrals.
 */
inline RingMoments ring_moments(double X, double sigma0, double sigma) {
    RingMoments m;
    const double A = X * X + sigma * sigma + sigma0 * sigma0;
    const double B = 2.0 * sigma * sigma0;
    const double k2 = 2.0 * B / (A + B);
    if (k2 < 0.95) {
        constexpr int M = 32;  // intervals on [0, pi]; the integrand is even
        for (int i = 0; i <= M; ++i) {
            const double phi = pi * i / M;
            const double c = std::cos(phi);
            const double w = (i == 0 || i == M ? 0.5 : 1.0) * 2.0 * pi / M;
            const double r2 = A - B * c;
            const double r1 = 1.0 / std::sqrt(r2);
            const double r3 = r1 / r2;
            const double r5 = r3 / r2;
            double cn = 1.0;
            for (int n = 0; n < 4; ++n) {
                if (n < 3) m.I1[n] += w * cn * r1;
                m.I3[n] += w * cn * r3;
                m.I5[n] += w * cn * r5;
                cn *= c;
            }
        }
        return m;
    }
    const auto ke = numerics::elliptic_ke(k2);
    const double kp2 = 1.0 - k2;
    const double K = ke.K, E = ke.E;
    const double S = A + B;
    const double sq = std::sqrt(S);
    // R_p = \int_0^{2pi} r^p dphi = 4 S^{p/2} J_p(k)
    const double Rm5 = 4.0 / (S * S * sq) * (2.0 * (2.0 - k2) * E / kp2 - K) / (3.0 * kp2);
    const double Rm3 = 4.0 / (S * sq) * E / kp2;
    const double Rm1 = 4.0 / sq * K;
    const double R1 = 4.0 * sq * E;
    const double R3 = 4.0 * S * sq * (2.0 * (2.0 - k2) * E - kp2 * K) / 3.0;
    const double iB = 1.0 / B;
    // c = (A - r^2)/B expanded binomially
    m.I1[0] = Rm1;
    m.I1[1] = (A * Rm1 - R1) * iB;
    m.I1[2] = (A * A * Rm1 - 2.0 * A * R1 + R3) * iB * iB;
    m.I3[0] = Rm3;
    m.I3[1] = (A * Rm3 - Rm1) * iB;
    m.I3[2] = (A * A * Rm3 - 2.0 * A * Rm1 + R1) * iB * iB;
    m.I3[3] = (A * A * A * Rm3 - 3.0 * A * A * Rm1 + 3.0 * A * R1 - R3) * iB * iB * iB;
    m.I5[0] = Rm5;
    m.I5[1] = (A * Rm5 - Rm3) * iB;
    m.I5[2] = (A * A * Rm5 - 2.0 * A * Rm3 + Rm1) * iB * iB;
    m.I5[3] = (A * A * A * Rm5 - 3.0 * A * A * Rm3 + 3.0 * A * Rm1 - R1) * iB * iB * iB;
    return m;
}

using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat3 = std::array<std::array<double, 3>, 3>;

namespace detail {

// \int p(c) c^0..3 weighted moments for a cubic p
inline double moment(const std::array<double, 4>& I, double p0, double p1, double p2 = 0.0, double p3 = 0.0) {
    return p0 * I[0] + p1 * I[1] + p2 * I[2] + p3 * I[3];
}

}  // namespace detail

/**
 * @brief Azimuthally integrated Stokeslet for axisymmetric (m = 0) traction.
 *
 * Entry (alpha, beta) is sigma \int e_alpha(0) . G . e_beta(phi) dphi with
 * G = I/r + d d/r^3, components ordered (axial, radial). Velocity at the
 * target is -(1/8 pi eta) times this applied to the traction per unit length.
 */
inline Mat2 single_layer_m0(double X, double sigma0, double sigma, const RingMoments& I) {
    Mat2 S{};
    S[0][0] = sigma * (I.I1[0] + X * X * I.I3[0]);
    S[0][1] = sigma * X * (sigma0 * I.I3[1] - sigma * I.I3[0]);
    S[1][0] = sigma * X * (sigma0 * I.I3[0] - sigma * I.I3[1]);
    S[1][1] = sigma * (I.I1[1] + detail::moment(I.I3, -sigma * sigma0, sigma * sigma + sigma0 * sigma0, -sigma * sigma0));
    return S;
}

/**
 * @brief Azimuthally integrated stresslet contracted with the source normal.
 *
 * Entry (alpha, beta) is -6 sigma \int (e_beta.d)(e_alpha.d)(n.d)/r^5 dphi,
 * d = source - target; velocity gets +(1/8 pi) times this applied to the
 * surface velocity. If uniform is set it receives the column for the constant
 * vector that equals e_sig at phi = 0.
 */
inline Mat2 double_layer_m0(double X, double sigma0, double sigma, double nx, double ns, const RingMoments& I,
                            std::array<double, 2>* uniform = nullptr) {
    // polynomials in c: e_x.d = -X, e_sig(0).d = sigma c - sigma0,
    // e_sig(phi).d = sigma - sigma0 c, n(phi).d = -nx X + ns sigma - ns sigma0 c
    const double p0 = -nx * X + ns * sigma, p1 = -ns * sigma0;
    auto mul = [](std::array<double, 4> a, double b0, double b1) {
        std::array<double, 4> r{};
        for (int i = 0; i < 3; ++i) {
            r[i] += a[i] * b0;
            r[i + 1] += a[i] * b1;
        }
        return r;
    };
    const std::array<double, 4> src_x{-X, 0, 0, 0}, src_s{sigma, -sigma0, 0, 0}, src_y{-sigma0, sigma, 0, 0};
    const double tx0 = -X, tx1 = 0.0, ts0 = -sigma0, ts1 = sigma;
    Mat2 D{};
    const std::array<double, 4>* src[3] = {&src_x, &src_s, &src_y};
    for (int b = 0; b < (uniform ? 3 : 2); ++b) {
        const auto sn = mul(*src[b], p0, p1);
        const auto vx = mul(sn, tx0, tx1);
        const auto vs = mul(sn, ts0, ts1);
        const double dx = -6.0 * sigma * detail::moment(I.I5, vx[0], vx[1], vx[2], vx[3]);
        const double ds = -6.0 * sigma * detail::moment(I.I5, vs[0], vs[1], vs[2], vs[3]);
        if (b < 2) {
            D[0][b] = dx;
            D[1][b] = ds;
        } else {
            (*uniform)[0] = dx;
            (*uniform)[1] = ds;
        }
    }
    return D;
}

/**
 * @brief Stokeslet ring kernel for first azimuthal harmonic traction.
 *
 * Traction (F_x cos phi, F_sig cos phi, F_phi sin phi); velocity components
 * (U_x cos phi, U_sig cos phi, U_phi sin phi). Entries carry the source
 * radius sigma; velocity is -(1/8 pi eta) times this applied to F.
 */
inline Mat3 single_layer_m1(double X, double sigma0, double sigma, const RingMoments& I) {
    const auto& I1 = I.I1;
    const auto& I3 = I.I3;
    const double s = sigma, s0 = sigma0;
    Mat3 K{};
    K[0][0] = I1[1] + X * X * I3[1];
    K[0][1] = -X * (s * I3[1] - s0 * I3[2]);
    K[0][2] = -X * s0 * (I3[0] - I3[2]);
    K[1][0] = -X * (s * I3[2] - s0 * I3[1]);
    K[1][1] = I1[2] + detail::moment(I3, 0.0, -s * s0, s * s + s0 * s0, -s * s0);
    K[1][2] = -(I1[0] - I1[2]) + s0 * detail::moment(I3, -s0, s, s0, -s);
    K[2][0] = X * s * (I3[0] - I3[2]);
    K[2][1] = -(I1[0] - I1[2]) - s * (s * (I3[0] - I3[2]) - s0 * (I3[1] - I3[3]));
    K[2][2] = I1[2] + s * s0 * (I3[1] - I3[3]);
    for (auto& row : K)
        for (double& v : row) v *= s;
    return K;
}

}  // namespace microbot::bem
