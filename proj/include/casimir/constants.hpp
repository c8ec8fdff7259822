#pragma once

namespace casimir {

/// CODATA 2018 values, SI units.
struct PhysicalConstants {
  double kB;    // J/K
  double hbar;  // J s
  double c;     // m/s
  double eps0;  // F/m
  double e;     // C
  double me;    // kg
  double eV_to_rad_s;
};

inline constexpr PhysicalConstants kConstants{
    .kB = 1.380649e-23,
    .hbar = 1.054571817e-34,
    .c = 299792458.0,
    .eps0 = 8.8541878128e-12,
    .e = 1.602176634e-19,
    .me = 9.1093837015e-31,
    .eV_to_rad_s = 1.602176634e-19 / 1.054571817e-34,
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Photon energy in eV to angular frequency in rad/s.
constexpr double ev_to_rad_s(double energy_ev) { return energy_ev * kConstants.eV_to_rad_s; }
constexpr double rad_s_to_ev(double omega) { return omega / kConstants.eV_to_rad_s; }

}  // namespace casimir
