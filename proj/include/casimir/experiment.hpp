#pragma once

#include <functional>
#include <optional>

#include "casimir/lifshitz.hpp"

namespace casimir::experiment {

/// Cantilever and readout parameters of the force measurement.
struct CantileverParams {
  double spring_constant;     // k, N/m
  double resonance_frequency; // f_r, Hz
  double quality_factor;      // Q
  double bandwidth;           // B, Hz
  double temperature;         // K
  std::optional<double> mass; // kg; defaults to k / (2 pi f_r)^2

  /// Throws ParameterError on non-positive fields or a mass inconsistent with
  /// k and f_r (1e-9 relative).
  void validate() const;
  double effective_mass() const;
  double angular_resonance() const;  // rad/s
};

/// Thermal-noise limited force: sqrt(2 kB T k B / (pi Q f_r)).
double min_detectable_force(const CantileverParams& p);

struct ResonanceShift {
  double shift_hz;
  bool linear_regime;  // |gradient| / k < 0.01
};

/// f_shifted - f_r = -(omega_r / 2k) dF/dz / (2 pi), in Hz. Applied to the
/// gradient of a difference force it gives the shift between the two sections.
ResonanceShift resonance_shift(const CantileverParams& p, double force_gradient);

/// Pressure between parallel plates equivalent to a sphere-plate force
/// gradient: -dF/dz / (2 pi R).
double pressure_from_force_gradient(double radius, double force_gradient);

/// Five-point central derivative [f(z-2h) - 8f(z-h) + 8f(z+h) - f(z+2h)] / 12h.
double five_point_derivative(const std::function<double(double)>& f, double z, double step);

/// Step used for every separation derivative in this package.
inline double derivative_step(double z) { return z / 200.0; }

/// d(Delta F)/dz of difference_force at z with the five-point stencil.
double difference_force_gradient(const lifshitz::PermittivityModel& sphere,
                                 const lifshitz::PermittivityModel& high,
                                 const lifshitz::PermittivityModel& low, double radius, double z,
                                 const lifshitz::MatsubaraGrid& grid);

}  // namespace casimir::experiment
