#include <gtest/gtest.h>

#include <random>

#include <microbot/numerics/legendre.hpp>
#include <microbot/squirmer_modes.hpp>

using namespace microbot;

namespace {

// P_10 from its explicit coefficients, and its derivative
double p10(double x) {
    const double c[] = {-63, 0, 3465, 0, -30030, 0, 90090, 0, -109395, 0, 46189};
    double s = 0.0;
    for (int i = 10; i >= 0; --i) s = s * x + c[i];
    return s / 256.0;
}

double dp10(double x) {
    const double c[] = {-63, 0, 3465, 0, -30030, 0, 90090, 0, -109395, 0, 46189};
    double s = 0.0;
    for (int i = 10; i >= 1; --i) s = s * x + i * c[i];
    return s / 256.0;
}

const Scenario low = make_scenario(Preset::LOW);

ModeSpectrum reference_spectrum(double eps = 0.05) { return normalize_spectrum(optimal_spectrum(10, 10, eps), 1e-6); }

}  // namespace

TEST(Legendre, EndpointsAndLowDegree) {
    auto [P, V] = numerics::legendre_pair(2, 1.0);
    EXPECT_DOUBLE_EQ(P, 1.0);
    EXPECT_DOUBLE_EQ(V, 0.0);
    std::tie(P, V) = numerics::legendre_pair(2, 0.0);
    EXPECT_DOUBLE_EQ(P, -0.5);
    EXPECT_NEAR(V, 0.0, 1e-16);
    for (double x : {-0.9, -0.3, 0.2, 0.7}) {
        std::tie(P, V) = numerics::legendre_pair(2, x);
        EXPECT_NEAR(V, -x * std::sqrt(1.0 - x * x), 1e-15);
    }
}

TEST(Legendre, DegreeTenBruteForce) {
    auto [P, V] = numerics::legendre_pair(10, 0.5);
    EXPECT_NEAR(P, -0.18822860, 1e-8);
    for (double x : {-0.95, -0.5, 0.0, 0.33, 0.5, 0.8, 0.99}) {
        std::tie(P, V) = numerics::legendre_pair(10, x);
        EXPECT_NEAR(P, p10(x), 1e-13);
        EXPECT_NEAR(V, -std::sqrt(1.0 - x * x) * dp10(x) / 11.0, 1e-12);
    }
}

TEST(Legendre, RejectsAbscissaOutsideRange) {
    EXPECT_THROW(numerics::legendre_pair(3, 1.5), DomainError);
    EXPECT_THROW(numerics::legendre_pair(3, -1.0001), DomainError);
}

TEST(OptimalSpectrum, FirstModeAmplitudes) {
    const auto s = optimal_spectrum(10, 10);
    ASSERT_EQ(s.modes.size(), 11u);
    EXPECT_EQ(s.modes[0].n, 10);
    EXPECT_NEAR(s.modes[0].A, (1.0 + std::sqrt(2.0)) * std::sin(pi / 12.0), 1e-14);
    EXPECT_NEAR(s.modes[0].A, 0.6249, 1e-4);
    EXPECT_NEAR(s.modes[0].B, 0.2588, 1e-4);
    EXPECT_EQ(s.modes[0].gamma, 0.0);
    EXPECT_FALSE(s.normalized);
}

TEST(OptimalSpectrum, SingleModeAndRatio) {
    const auto s = optimal_spectrum(2, 0);
    ASSERT_EQ(s.modes.size(), 1u);
    EXPECT_NEAR(s.modes[0].A, 1.0 + std::sqrt(2.0), 1e-14);
    for (auto [k, p] : {std::pair{2, 3}, std::pair{5, 1}, std::pair{10, 10}}) {
        for (const auto& m : optimal_spectrum(k, p).modes) {
            EXPECT_NEAR(m.A / m.B, 1.0 + std::sqrt(2.0), 1e-13);
            EXPECT_NEAR(m.gamma, -0.5 * pi * (m.n - k), 1e-14);
            EXPECT_EQ(m.gamma, m.eta);
        }
    }
    EXPECT_THROW(optimal_spectrum(1, 0), InvalidParameter);
    EXPECT_THROW(optimal_spectrum(2, -1), InvalidParameter);
}

TEST(SurfaceState, ZeroAmplitudeIsRest) {
    auto s = optimal_spectrum(10, 10, 0.0, 1000.0);
    for (double t : {0.0, 1e-4, 3e-3}) {
        const auto st = surface_state(s, 1e-6, 0.7, t);
        EXPECT_EQ(st.r, 1e-6);
        EXPECT_EQ(st.theta, 0.7);
    }
}

TEST(SurfaceState, PoleHasNoTangentialDisplacement) {
    auto s = reference_spectrum();
    s.omega = 1000.0;
    for (double t : {0.0, 1e-3, 2e-3}) EXPECT_NEAR(surface_state(s, 1e-6, 0.0, t).theta, 0.0, 1e-15);
}

TEST(SurfaceState, VelocityMatchesFiniteDifference) {
    auto s = reference_spectrum();
    s.omega = 2.0 * pi * 2000.0;
    const double h = 1e-6 * 2.0 * pi / s.omega;
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> th(0.0, pi), tt(0.0, 1e-3);
    for (int i = 0; i < 50; ++i) {
        const double vt = th(rng), t = tt(rng);
        const auto st = surface_state(s, 1e-6, vt, t);
        const auto p = surface_state(s, 1e-6, vt, t + h), m = surface_state(s, 1e-6, vt, t - h);
        const double vr = (p.r - m.r) / (2 * h), vth = st.r * (p.theta - m.theta) / (2 * h);
        const double scale = std::hypot(st.v_radial, st.v_tangential) + 1e-3 * 1e-6 * 0.05 * s.omega;
        EXPECT_LT(std::abs(vr - st.v_radial) / scale, 1e-5);
        EXPECT_LT(std::abs(vth - st.v_tangential) / scale, 1e-5);
    }
}

TEST(Normalize, PeakDisplacementIsAEpsilon) {
    const auto s = reference_spectrum();
    EXPECT_TRUE(s.normalized);
    EXPECT_NEAR(max_material_displacement(s, 1e-6), 50e-9, 1e-4 * 50e-9);
    // brute-force grid never exceeds the refined peak
    double grid_max = 0.0;
    for (int i = 0; i <= 400; ++i) {
        for (int k = 0; k < 64; ++k) {
            auto sw = s;
            sw.omega = 1.0;
            const double vt = pi * i / 400.0;
            const auto st = surface_state(sw, 1e-6, vt, 2.0 * pi * k / 64.0);
            const double dx = st.r * std::cos(st.theta) - 1e-6 * std::cos(vt);
            const double dy = st.r * std::sin(st.theta) - 1e-6 * std::sin(vt);
            grid_max = std::max(grid_max, std::hypot(dx, dy));
        }
    }
    EXPECT_LE(grid_max, 50e-9 * (1.0 + 1e-6));
    EXPECT_GT(grid_max, 50e-9 * 0.99);
}

TEST(Normalize, LargestMotionNearEquator) {
    const auto peak = detail::exact_displacement_peak(reference_spectrum(), 512, 256);
    EXPECT_NEAR(peak.vartheta, pi / 2.0, 0.2);
}

TEST(Normalize, ScaleInvariant) {
    auto raw = optimal_spectrum(10, 10, 0.05);
    auto twice = raw;
    for (auto& m : twice.modes) {
        m.A *= 2.0;
        m.B *= 2.0;
    }
    const auto a = normalize_spectrum(raw, 1e-6), b = normalize_spectrum(twice, 1e-6);
    for (std::size_t i = 0; i < a.modes.size(); ++i) {
        EXPECT_NEAR(a.modes[i].A, b.modes[i].A, 1e-7 * a.modes[0].A);
        EXPECT_NEAR(a.modes[i].B, b.modes[i].B, 1e-7 * a.modes[0].A);
    }
}

TEST(Normalize, SingleRadialModePeaksAtPole) {
    ModeSpectrum s;
    s.modes = {Mode{2, 1.0, 0.0, 0.0, 0.0}};
    s.epsilon = 0.05;
    const auto n = normalize_spectrum(s, 1e-6);
    EXPECT_NEAR(n.modes[0].A, 1.0, 1e-7);
    const auto peak = detail::exact_displacement_peak(n, 512, 256);
    EXPECT_TRUE(peak.vartheta < 1e-3 || peak.vartheta > pi - 1e-3);
    EXPECT_NEAR(max_material_displacement(n, 1e-6), 0.05e-6, 1e-7 * 0.05e-6);
}

TEST(Normalize, RejectsZeroSpectrum) {
    ModeSpectrum s;
    s.modes = {Mode{3, 0.0, 0.0, 0.0, 0.0}};
    EXPECT_THROW(normalize_spectrum(s, 1e-6), InvalidParameter);
}

TEST(Quasistatic, ScenarioValues) {
    const auto lo = quasistatic_validity(low, 2.0 * pi * 2000.0);
    EXPECT_NEAR(lo.delta, 12.6e-6, 0.05e-6);
    EXPECT_NEAR(lo.womersley, 0.112, 0.001);
    const auto hi = quasistatic_validity(make_scenario(Preset::HIGH), 2.0 * pi * 20.0);
    EXPECT_NEAR(hi.delta, 12.6e-3, 0.05e-3);
    EXPECT_NEAR(hi.womersley, 1.12e-4, 0.01e-4);
    EXPECT_NEAR(quasistatic_validity(low, 4000.0).delta, 0.5 * quasistatic_validity(low, 1000.0).delta, 1e-18);
    EXPECT_THROW(quasistatic_validity(low, 0.0), InvalidParameter);
}

TEST(Oscillation, ReferenceCoefficients) {
    const auto c = oscillation_coefficients(reference_spectrum());
    EXPECT_NEAR(c.C_U, 3.29, 0.05 * 3.29);
    EXPECT_NEAR(c.C_P, 65.5, 0.05 * 65.5);
    EXPECT_NEAR(c.C_eff, 3.12, 0.05 * 3.12);
    EXPECT_NEAR(c.C_T, 62.1, 0.05 * 62.1);
}

TEST(Oscillation, LowScenarioRecord) {
    auto s = reference_spectrum();
    s.omega = 2.0 * pi * 2000.0;
    const auto r = oscillation_performance(s, low);
    EXPECT_NEAR(r.U, 100e-6, 0.05 * 100e-6);
    EXPECT_NEAR(r.P_propel, 0.025e-12, 0.05 * 0.025e-12);
    EXPECT_NEAR(r.efficiency, 0.008, 0.0005);
    EXPECT_NEAR(r.thrust, 1.9e-12, 0.1e-12);
}

TEST(Oscillation, RequiresNormalizedSpectrum) {
    EXPECT_THROW(oscillation_coefficients(optimal_spectrum(10, 10)), InvalidState);
    EXPECT_THROW(oscillation_performance(optimal_spectrum(10, 10), low), InvalidState);
}

TEST(Oscillation, ZeroAmplitudeGivesZeroRecord) {
    auto s = normalize_spectrum(optimal_spectrum(10, 10, 0.0), 1e-6);
    s.omega = 1000.0;
    const auto r = oscillation_performance(s, low);
    EXPECT_EQ(r.U, 0.0);
    EXPECT_EQ(r.P_propel, 0.0);
    EXPECT_EQ(r.thrust, 0.0);
}

TEST(Oscillation, ScalingLaws) {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    const auto base = reference_spectrum(0.02);
    const auto c = oscillation_coefficients(base);
    for (int i = 0; i < 10; ++i) {
        auto s = base;
        s.epsilon = 0.02 * u(rng);
        s.omega = 500.0 * u(rng);
        Scenario sc = low;
        sc.eta *= u(rng);
        sc.nu = sc.eta / sc.rho;
        const auto r = oscillation_performance(s, sc, &c);
        const double e2 = s.epsilon * s.epsilon, w = s.omega;
        EXPECT_NEAR(r.U, c.C_U * sc.a * e2 * w, 1e-12 * r.U);
        EXPECT_NEAR(r.P_propel, c.C_P * std::pow(sc.a, 3) * e2 * sc.eta * w * w, 1e-12 * r.P_propel);
        EXPECT_NEAR(r.thrust, c.C_T * sc.a * sc.a * e2 * sc.eta * w, 1e-12 * r.thrust);
        EXPECT_NEAR(r.efficiency, c.C_eff * e2, 1e-12 * r.efficiency);
    }
}

TEST(Oscillation, PhaseReversalReversesSpeed) {
    auto raw = optimal_spectrum(10, 10, 0.05);
    for (auto& m : raw.modes) {
        m.gamma = -m.gamma;
        m.eta = -m.eta;
    }
    const auto fwd = oscillation_coefficients(reference_spectrum());
    const auto rev = oscillation_coefficients(normalize_spectrum(raw, 1e-6));
    EXPECT_NEAR(rev.C_U, -fwd.C_U, 1e-6 * fwd.C_U);
    EXPECT_NEAR(rev.C_P, fwd.C_P, 1e-6 * fwd.C_P);
}

TEST(Oscillation, RadialOnlyReachesAboutSixtyPercent) {
    auto raw = optimal_spectrum(10, 10, 0.05);
    for (auto& m : raw.modes) m.B = 0.0;
    const double ratio =
        oscillation_coefficients(normalize_spectrum(raw, 1e-6)).C_U / oscillation_coefficients(reference_spectrum()).C_U;
    EXPECT_NEAR(ratio, 0.6, 0.1 * 0.6);
}

TEST(Oscillation, OmegaForSpeedInvertsSpeed) {
    const auto s = reference_spectrum();
    const auto c = oscillation_coefficients(s);
    const double w = omega_for_speed(c, 1e-6, 0.05, 100e-6);
    EXPECT_NEAR(c.C_U * 1e-6 * 0.0025 * w, 100e-6, 1e-18);
    EXPECT_NEAR(w / (2 * pi), 1930, 10);
}

TEST(Oscillation, WomersleyGuard) {
    auto s = reference_spectrum();
    s.omega = 1e7;
    EXPECT_THROW(oscillation_performance(s, low), InvalidParameter);
}
