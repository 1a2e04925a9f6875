#pragma once

#include <numbers>

namespace rydgate::constants {

// CODATA 2018 values, SI units.
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double electron_charge = 1.602176634e-19;  // C
inline constexpr double electron_mass = 9.1093837015e-31;   // kg
inline constexpr double bohr_radius = 5.29177210903e-11;    // m
inline constexpr double bohr_magneton = 9.2740100783e-24;   // J/T
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double speed_of_light = 299792458.0;       // m/s
inline constexpr double electron_g_factor = 2.00231930436;  // |g_e|

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Frequency conversions. Internally every frequency-like quantity is an
// angular frequency in rad/s; inputs and reports use nu = omega/2pi.
inline constexpr double mhz_to_rad(double nu_mhz) { return two_pi * 1e6 * nu_mhz; }
inline constexpr double rad_to_mhz(double omega) { return omega / (two_pi * 1e6); }
inline constexpr double ghz_to_rad(double nu_ghz) { return two_pi * 1e9 * nu_ghz; }
inline constexpr double khz_to_rad(double nu_khz) { return two_pi * 1e3 * nu_khz; }

// Polarizability conversions between the Gaussian display unit (cm^3) and
// SI (C^2 m^2 / J). alpha_SI = 4 pi eps0 * alpha_Gaussian[m^3].
inline constexpr double cm3_to_si(double alpha_cm3) {
    return 4.0 * pi * vacuum_permittivity * alpha_cm3 * 1e-6;
}
inline constexpr double si_to_cm3(double alpha_si) {
    return alpha_si * 1e6 / (4.0 * pi * vacuum_permittivity);
}

}  // namespace rydgate::constants
