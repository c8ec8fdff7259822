#pragma once

#include <string>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/polylog.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::lifshitz {

using materials::PermittivityModel;

/// Temperature and truncation policy for the Matsubara sum.
///
/// The l = 0 term carries weight 1/2, every l >= 1 term weight 1. The sum
/// stops at the first l >= 1 whose magnitude falls below rel_tol times the
/// accumulated magnitude, or at l_max_cap terms (reported as non-converged).
struct MatsubaraGrid {
  double temperature;  // K
  double rel_tol = 1e-9;
  int l_max_cap = 20000;

  void validate() const;
};

/// xi_l = 2 pi kB T l / hbar. Throws DomainError for l < 0 or T <= 0.
double matsubara_frequency(int l, double temperature);

/// Fresnel amplitudes on the imaginary frequency axis, sign convention
/// r_TM = (eps q - k)/(eps q + k), r_TE = (k - q)/(k + q); both lie in [0, 1]
/// for eps >= 1.
struct ReflectionPair {
  double tm;
  double te;
};

/// eps may be +infinity (perfect reflector). At xi = 0 a finite eps gives
/// ((eps-1)/(eps+1), 0) and an infinite eps gives (1, 0).
/// Throws DomainError when xi = k_perp = 0, or for eps < 1 / negative inputs.
ReflectionPair reflection_coefficients(double eps, double xi, double k_perp);

/// Same, but for a model: applies the model's zero-frequency rules
/// (conducting: r_TM = 1; TE from the model's ZeroFrequencyTE rule;
/// perfect conductor: r_TE = 1).
ReflectionPair reflection_coefficients(const PermittivityModel& model, double xi, double k_perp);

struct Geometry {
  enum class Kind { plate_plate, sphere_plate };
  Kind kind = Kind::plate_plate;
  double radius = 0.0;  // m, sphere-plate only

  static Geometry plates() { return {}; }
  static Geometry sphere(double radius) { return {Kind::sphere_plate, radius}; }
};

struct HalfspacePair {
  PermittivityModel side_a;
  PermittivityModel side_b;
  Geometry geometry;
};

struct TruncationReport {
  int terms = 0;                 // Matsubara terms summed
  double last_term_ratio = 0.0;  // magnitude of last term / accumulated magnitude
  bool converged = true;
};

struct LifshitzResult {
  double value = 0.0;
  TruncationReport truncation;
  std::vector<std::string> warnings;
};

/// Largest z/R for which the proximity force approximation is used silently.
inline constexpr double kPfaMaxRatio = 0.01;

/// (kB T / 2 pi) sum'_l int k dk sum_alpha ln(1 - r_a r_b e^{-2 q z}), J/m^2.
/// Throws DomainError for z <= 0.
LifshitzResult free_energy_per_area(const HalfspacePair& pair, double z, const MatsubaraGrid& grid,
                                    const QuadratureRule& rule = QuadratureRule::standard());

/// -(kB T / pi) sum'_l int k dk q sum_alpha [e^{2qz}/(r_a r_b) - 1]^-1, Pa.
LifshitzResult plate_plate_pressure(const HalfspacePair& pair, double z, const MatsubaraGrid& grid,
                                    const QuadratureRule& rule = QuadratureRule::standard());

/// 2 pi R times the free energy per area. Needs a sphere-plate geometry;
/// z/R > 0.01 adds a warning but still computes.
LifshitzResult sphere_plate_force(const HalfspacePair& pair, double z, const MatsubaraGrid& grid,
                                  const QuadratureRule& rule = QuadratureRule::standard());

/// F_high(z) - F_low(z) for a sphere of `sphere` material over two plate
/// sections, evaluated as one log-ratio sum sharing q_l and the sphere
/// reflection coefficients.
LifshitzResult difference_force(const PermittivityModel& sphere, const PermittivityModel& high,
                                const PermittivityModel& low, double radius, double z,
                                const MatsubaraGrid& grid,
                                const QuadratureRule& rule = QuadratureRule::standard());

/// P_high(z) - P_low(z) between a plate and two plate sections, one pass.
LifshitzResult difference_pressure(const PermittivityModel& plate, const PermittivityModel& high,
                                   const PermittivityModel& low, double z, const MatsubaraGrid& grid,
                                   const QuadratureRule& rule = QuadratureRule::standard());

/// Zero-frequency gap between the finite-static-permittivity and the
/// dc-conducting description of the low section, sphere-plate:
/// -(kB T R / 8 z^2) [zeta(3) - Li_3((eps0-1)/(eps0+1))]. eps0 may be +inf.
double zero_freq_gap_force(double radius, double z, double temperature, double eps0);

/// Plate-plate counterpart: -(kB T / 8 pi z^3) [zeta(3) - Li_3((eps0-1)/(eps0+1))].
double zero_freq_gap_pressure(double z, double temperature, double eps0);

/// Unweighted single-l contributions, exposed for consistency checks.
/// Energy term: int_0^inf k dk sum_alpha [ln(1 - r r_high e^-2qz) - ln(1 - r r_low e^-2qz)]  (1/m^2)
/// Pressure term: int_0^inf k dk q sum_alpha [bracket_high - bracket_low]                      (1/m^3)
/// Pass the same model for high and low-less single-pair terms via the
/// overloads without `low`.
double energy_term(const PermittivityModel& probe, const PermittivityModel& high,
                   const PermittivityModel& low, int l, double z, double temperature,
                   const QuadratureRule& rule = QuadratureRule::standard());
double energy_term(const PermittivityModel& probe, const PermittivityModel& target, int l, double z,
                   double temperature, const QuadratureRule& rule = QuadratureRule::standard());
double pressure_term(const PermittivityModel& probe, const PermittivityModel& high,
                     const PermittivityModel& low, int l, double z, double temperature,
                     const QuadratureRule& rule = QuadratureRule::standard());
double pressure_term(const PermittivityModel& probe, const PermittivityModel& target, int l, double z,
                     double temperature, const QuadratureRule& rule = QuadratureRule::standard());

}  // namespace casimir::lifshitz
