#include <gtest/gtest.h>

#include <random>

#include <microbot/io/config.hpp>
#include <microbot/scenario.hpp>

using namespace microbot;

TEST(StokesDrag, LowAndHighScenario) {
    EXPECT_NEAR(stokes_drag(1e-6, 1e-3, 100e-6), 1.885e-12, 0.001e-12);
    EXPECT_NEAR(stokes_drag(1e-6, 10.0, 1e-6), 188.5e-12, 0.1e-12);
    EXPECT_EQ(stokes_drag(1e-6, 1e-3, 0.0), 0.0);
}

TEST(StokesDrag, RejectsBadInput) {
    EXPECT_THROW(stokes_drag(0.0, 1e-3, 1.0), InvalidParameter);
    EXPECT_THROW(stokes_drag(1e-6, -1.0, 1.0), InvalidParameter);
    EXPECT_THROW(stokes_drag(1e-6, 1e-3, -1.0), InvalidParameter);
}

TEST(StokesDrag, LinearInEachArgument) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng) * 1e-6, eta = u(rng) * 1e-3, U = u(rng) * 1e-5, k = u(rng);
        const double F = stokes_drag(a, eta, U);
        EXPECT_NEAR(stokes_drag(k * a, eta, U), k * F, 1e-13 * k * F);
        EXPECT_NEAR(stokes_drag(a, k * eta, U), k * F, 1e-13 * k * F);
        EXPECT_NEAR(stokes_drag(a, eta, k * U), k * F, 1e-13 * k * F);
    }
}

TEST(DragPower, EqualInBothScenarios) {
    for (const auto& s : {make_scenario(Preset::LOW), make_scenario(Preset::HIGH)}) {
        const double P = drag_power(s.a, s.eta, s.U);
        EXPECT_NEAR(P, 1.885e-16, 0.001e-16);
        EXPECT_NEAR(P, 2e-16, 0.06 * 2e-16);
    }
}

TEST(Reynolds, Presets) {
    EXPECT_NEAR(reynolds(make_scenario(Preset::LOW)), 1e-4, 1e-16);
    EXPECT_NEAR(reynolds(make_scenario(Preset::HIGH)), 1e-10, 1e-22);
    EXPECT_EQ(reynolds(1e-6, 0.0, 1e-6), 0.0);
    EXPECT_THROW(reynolds(1e-6, 1.0, 0.0), InvalidParameter);
}

TEST(MakeScenario, Presets) {
    const auto lo = make_scenario(Preset::LOW);
    EXPECT_EQ(lo.eta, 1e-3);
    EXPECT_EQ(lo.nu, lo.eta / lo.rho);
    EXPECT_NEAR(lo.nu, 1e-6, 1e-20);
    EXPECT_EQ(lo.U, 100e-6);
    EXPECT_EQ(lo.a, 1e-6);
    EXPECT_EQ(lo.T_body, 310.0);
    EXPECT_EQ(lo.c, 1500.0);
    const auto hi = make_scenario("HIGH");
    EXPECT_EQ(hi.eta, 10.0);
    EXPECT_NEAR(hi.nu, 1e-2, 1e-16);
    EXPECT_EQ(hi.U, 1e-6);
}

TEST(MakeScenario, UnknownPresetListsValidOnes) {
    try {
        make_scenario("medium");
        FAIL();
    } catch (const InvalidParameter& e) {
        EXPECT_NE(std::string(e.what()).find("low, high"), std::string::npos);
    }
}

TEST(MakeScenario, ExplicitFieldsDeriveNu) {
    const auto s = make_scenario("x", 1500, 1000, 310, 1e-3, 1e-6, 1e-4);
    EXPECT_NEAR(s.nu, 1e-6, 1e-20);
    EXPECT_THROW(make_scenario("x", 1500, 1000, 310, -1e-3, 1e-6, 1e-4), InvalidParameter);
}

TEST(CompleteRecord, EfficiencyIsDragPowerOverPropulsion) {
    const auto r = complete_record(1e-4, 5e-16, 1e-16, 1e-6, 1e-3);
    EXPECT_DOUBLE_EQ(r.efficiency, drag_power(1e-6, 1e-3, 1e-4) / 5e-16);
    EXPECT_DOUBLE_EQ(r.P_total(), 6e-16);
}

TEST(ScenarioConfig, OverridesPreset) {
    std::istringstream in("# comment\npreset = high\neta = 1.0   # thinner\nU=5e-6\n");
    const auto s = io::parse_scenario(in);
    EXPECT_EQ(s.eta, 1.0);
    EXPECT_EQ(s.U, 5e-6);
    EXPECT_EQ(s.nu, 1.0 / 1000.0);
    EXPECT_EQ(s.name, "high");
}

TEST(ScenarioConfig, RejectsUnknownKeyWithLine) {
    std::istringstream in("eta=1e-3\nviscosity=2\n");
    try {
        io::parse_scenario(in, "f.cfg");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("f.cfg:2"), std::string::npos);
    }
}

TEST(ScenarioConfig, RejectsInconsistentNu) {
    std::istringstream in("eta=1e-3\nrho=1000\nnu=2e-6\n");
    EXPECT_THROW(io::parse_scenario(in), ConfigError);
    std::istringstream ok("eta=1e-3\nrho=1000\nnu=1e-6\n");
    EXPECT_NO_THROW(io::parse_scenario(ok));
}

TEST(ScenarioConfig, RejectsBadValues) {
    std::istringstream a("eta=abc\n");
    EXPECT_THROW(io::parse_scenario(a), ConfigError);
    std::istringstream b("eta=-1\n");
    EXPECT_THROW(io::parse_scenario(b), ConfigError);
    std::istringstream c("eta\n");
    EXPECT_THROW(io::parse_scenario(c), ConfigError);
    std::istringstream d("a=1e-6\na=2e-6\n");
    EXPECT_THROW(io::parse_scenario(d), ConfigError);
}
