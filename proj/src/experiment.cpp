#include "casimir/experiment.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::experiment {

namespace {
constexpr double kLinearLimit = 0.01;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string(what) + " must be > 0");
}
}  // namespace

void CantileverParams::validate() const {
  require_positive(spring_constant, "spring constant");
  require_positive(resonance_frequency, "resonance frequency");
  require_positive(quality_factor, "quality factor");
  require_positive(bandwidth, "bandwidth");
  require_positive(temperature, "temperature");
  if (mass) {
    require_positive(*mass, "mass");
    const double omega = std::sqrt(spring_constant / *mass);
    const double expected = 2.0 * kPi * resonance_frequency;
    if (std::abs(omega - expected) > 1e-9 * expected) {
      throw ParameterError("mass inconsistent with spring constant and resonance frequency");
    }
  }
}

double CantileverParams::effective_mass() const {
  if (mass) return *mass;
  const double omega = angular_resonance();
  return spring_constant / (omega * omega);
}

double CantileverParams::angular_resonance() const { return 2.0 * kPi * resonance_frequency; }

double min_detectable_force(const CantileverParams& p) {
  p.validate();
  return std::sqrt(2.0 * kConstants.kB * p.temperature * p.spring_constant * p.bandwidth /
                   (kPi * p.quality_factor * p.resonance_frequency));
}

ResonanceShift resonance_shift(const CantileverParams& p, double force_gradient) {
  p.validate();
  const double angular_shift = -p.angular_resonance() / (2.0 * p.spring_constant) * force_gradient;
  return {angular_shift / (2.0 * kPi), std::abs(force_gradient) / p.spring_constant < kLinearLimit};
}

double pressure_from_force_gradient(double radius, double force_gradient) {
  require_positive(radius, "radius");
  return -force_gradient / (2.0 * kPi * radius);
}

double five_point_derivative(const std::function<double(double)>& f, double z, double step) {
  require_positive(step, "derivative step");
  return (f(z - 2.0 * step) - 8.0 * f(z - step) + 8.0 * f(z + step) - f(z + 2.0 * step)) / (12.0 * step);
}

double difference_force_gradient(const lifshitz::PermittivityModel& sphere,
                                 const lifshitz::PermittivityModel& high,
                                 const lifshitz::PermittivityModel& low, double radius, double z,
                                 const lifshitz::MatsubaraGrid& grid) {
  return five_point_derivative(
      [&](double zz) { return lifshitz::difference_force(sphere, high, low, radius, zz, grid).value; }, z,
      derivative_step(z));
}

}  // namespace casimir::experiment
