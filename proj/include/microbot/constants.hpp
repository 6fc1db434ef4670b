#pragma once

#include <numbers>

namespace microbot {

inline constexpr double pi = std::numbers::pi;

/// Boltzmann constant [J/K].
inline constexpr double k_boltzmann = 1.380649e-23;

namespace units {
inline constexpr double micrometer = 1e-6;
inline constexpr double nanometer = 1e-9;
inline constexpr double um2 = 1e-12;
inline constexpr double um3 = 1e-18;
inline constexpr double piconewton = 1e-12;
inline constexpr double picowatt = 1e-12;
inline constexpr double um_per_s = 1e-6;
inline constexpr double degree = pi / 180.0;
}  // namespace units

}  // namespace microbot
