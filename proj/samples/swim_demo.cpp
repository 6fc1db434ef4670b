// Band swimmer on a sphere: closed forms, surface quadrature and BEM side by side.

#include <cstdio>

#include <microbot.hpp>

int main() {
    using namespace microbot;
    const Scenario s = make_scenario(Preset::LOW);
    const BandActuation band{pi / 3.0, required_band_speed(s.U, pi / 3.0)};

    const auto closed = band_performance(band, s);
    const double U_quad = locomotion_velocity(band_field(band), s.a)[2];
    const auto bem = solve_swim({s.a, s.a}, band_profile(band.v, band.psi(), pi - band.psi()), s.eta, {256});

    std::printf("band speed v          %.4g um/s\n", band.v / units::um_per_s);
    std::printf("U closed form         %.6g um/s\n", closed.U / units::um_per_s);
    std::printf("U surface quadrature  %.6g um/s\n", U_quad / units::um_per_s);
    std::printf("U boundary elements   %.6g um/s\n", bem.rigid_velocity / units::um_per_s);
    std::printf("P closed form         %.4g pW\n", closed.P_propel / units::picowatt);
    std::printf("P boundary elements   %.4g pW\n", bem.power / units::picowatt);

    ModeSpectrum spec = normalize_spectrum(optimal_spectrum(10, 10, 0.05), s.a);
    const auto c = oscillation_coefficients(spec);
    spec.omega = omega_for_speed(c, s.a, spec.epsilon, s.U);
    const auto osc = oscillation_performance(spec, s, &c);
    std::printf("oscillating: omega %.5g rad/s, P %.4g pW, efficiency %.4f\n", spec.omega, osc.P_propel / units::picowatt,
                osc.efficiency);
    return 0;
}
