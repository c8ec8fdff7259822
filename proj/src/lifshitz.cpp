#include "casimir/lifshitz.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::lifshitz {

namespace {

ReflectionPair fresnel(double eps, double q, double k) {
  if (std::isinf(eps)) return {1.0, 1.0};
  return {(eps * q - k) / (eps * q + k), (k - q) / (k + q)};
}

// Reflection of one surface at one Matsubara frequency. Wavenumbers are made
// dimensionless with a length scale s: Q = q s, Xi = xi s / c. The Lifshitz
// integrals use s = 2 z, so Q is the exponent y = 2 q z.
class SurfaceResponse {
 public:
  SurfaceResponse(const PermittivityModel& model, double xi, double scale) {
    if (model.is_perfect_conductor()) {
      mode_ = Mode::perfect;
    } else if (xi == 0.0) {
      const double eps0 = model.static_permittivity();
      if (std::isinf(eps0)) {
        mode_ = Mode::static_conducting;
        if (model.zero_frequency_te() == materials::ZeroFrequencyTE::plasma_limit && model.drude()) {
          const double p = model.drude()->omega_p * scale / kConstants.c;
          plasma_sq_ = p * p;
        }
      } else {
        mode_ = Mode::static_finite;
        static_tm_ = (eps0 - 1.0) / (eps0 + 1.0);
      }
    } else {
      mode_ = Mode::dynamic;
      eps_ = model.eval(xi);
      const double xi_scaled = xi * scale / kConstants.c;
      excess_ = (eps_ - 1.0) * xi_scaled * xi_scaled;
      if (std::isinf(eps_)) mode_ = Mode::perfect;
    }
  }

  // Q is the scaled q; at xi = 0 it equals the scaled k_perp.
  ReflectionPair at(double q) const {
    switch (mode_) {
      case Mode::perfect:
        return {1.0, 1.0};
      case Mode::static_finite:
        return {static_tm_, 0.0};
      case Mode::static_conducting: {
        if (plasma_sq_ == 0.0) return {1.0, 0.0};
        const double k = std::sqrt(q * q + plasma_sq_);
        return {1.0, (k - q) / (k + q)};
      }
      case Mode::dynamic:
        return fresnel(eps_, q, std::sqrt(q * q + excess_));
    }
    return {0.0, 0.0};
  }

 private:
  enum class Mode { perfect, static_finite, static_conducting, dynamic };
  Mode mode_ = Mode::dynamic;
  double eps_ = 1.0;
  double excess_ = 0.0;
  double static_tm_ = 0.0;
  double plasma_sq_ = 0.0;
};

// ln(1 - p e^-y), accurate as p e^-y -> 1.
double log_one_minus(double p, double y) {
  if (p == 0.0) return 0.0;
  const double x = p * std::exp(-y);
  if (x < 0.5) return std::log1p(-x);
  return std::log((1.0 - p) * std::exp(-y) - std::expm1(-y));
}

// p e^-y / (1 - p e^-y) = p / (e^y - p).
double mode_occupation(double p, double y) {
  if (p == 0.0) return 0.0;
  return p / (std::expm1(y) + (1.0 - p));
}

enum class Kind { energy, pressure };

struct TermValue {
  double value;
  double magnitude;
};

double integrand(Kind kind, const ReflectionPair& a, const ReflectionPair& b, double y) {
  const double p_tm = a.tm * b.tm;
  const double p_te = a.te * b.te;
  if (kind == Kind::energy) return y * (log_one_minus(p_tm, y) + log_one_minus(p_te, y));
  return y * y * (mode_occupation(p_tm, y) + mode_occupation(p_te, y));
}

// One Matsubara term in units of 1/m^2 (energy) or 1/m^3 (pressure), after
// y = 2 q z: k dk = y dy / (4 z^2), q = y / (2 z).
TermValue compute_term(Kind kind, const PermittivityModel& probe, const PermittivityModel& high,
                       const PermittivityModel* low, int l, double z, double temperature,
                       const QuadratureRule& rule) {
  const double xi = matsubara_frequency(l, temperature);
  const double scale = 2.0 * z;
  const double y_l = xi * scale / kConstants.c;
  const SurfaceResponse probe_r(probe, xi, scale);
  const SurfaceResponse high_r(high, xi, scale);
  std::optional<SurfaceResponse> low_r;
  if (low != nullptr) low_r.emplace(*low, xi, scale);

  double value = 0.0;
  double magnitude = 0.0;
  const auto& nodes = rule.nodes();
  const auto& weights = rule.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double y = y_l + nodes[i];
    const ReflectionPair rp = probe_r.at(y);
    const double f_high = integrand(kind, rp, high_r.at(y), y);
    const double f_low = low_r ? integrand(kind, rp, low_r->at(y), y) : 0.0;
    value += weights[i] * (f_high - f_low);
    magnitude += weights[i] * (std::abs(f_high) + std::abs(f_low));
  }
  const double jacobian = kind == Kind::energy ? 1.0 / (4.0 * z * z) : 1.0 / (8.0 * z * z * z);
  return {value * jacobian, magnitude * jacobian};
}

template <class TermFn>
LifshitzResult matsubara_sum(const MatsubaraGrid& grid, TermFn&& term) {
  LifshitzResult result;
  double sum = 0.0;
  double magnitude = 0.0;
  result.truncation.converged = false;
  for (int l = 0; l < grid.l_max_cap; ++l) {
    const TermValue t = term(l);
    const double weight = l == 0 ? 0.5 : 1.0;
    sum += weight * t.value;
    magnitude += weight * t.magnitude;
    result.truncation.terms = l + 1;
    result.truncation.last_term_ratio = magnitude > 0.0 ? weight * t.magnitude / magnitude : 0.0;
    if (l >= 1 && weight * t.magnitude <= grid.rel_tol * magnitude) {
      result.truncation.converged = true;
      break;
    }
  }
  result.value = sum;
  if (!result.truncation.converged) {
    std::ostringstream msg;
    msg << "Matsubara sum not converged after " << grid.l_max_cap << " terms (last term ratio "
        << result.truncation.last_term_ratio << ")";
    result.warnings.push_back(msg.str());
  }
  return result;
}

void require_separation(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("separation must be > 0");
}

void check_pfa(LifshitzResult& result, double radius, double z) {
  if (z / radius > kPfaMaxRatio) {
    std::ostringstream msg;
    msg << "z/R = " << z / radius << " exceeds " << kPfaMaxRatio
        << "; proximity force approximation error may be large";
    result.warnings.push_back(msg.str());
  }
}

void require_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("sphere radius must be > 0");
}

LifshitzResult sum_energy(const PermittivityModel& probe, const PermittivityModel& high,
                          const PermittivityModel* low, double z, const MatsubaraGrid& grid,
                          const QuadratureRule& rule) {
  grid.validate();
  require_separation(z);
  return matsubara_sum(grid, [&](int l) {
    return compute_term(Kind::energy, probe, high, low, l, z, grid.temperature, rule);
  });
}

LifshitzResult sum_pressure(const PermittivityModel& probe, const PermittivityModel& high,
                            const PermittivityModel* low, double z, const MatsubaraGrid& grid,
                            const QuadratureRule& rule) {
  grid.validate();
  require_separation(z);
  return matsubara_sum(grid, [&](int l) {
    return compute_term(Kind::pressure, probe, high, low, l, z, grid.temperature, rule);
  });
}

void scale(LifshitzResult& r, double factor) { r.value *= factor; }

double gap_braces(double eps0) {
  if (!(eps0 > 1.0)) throw DomainError("static permittivity must be > 1");
  const double r = std::isinf(eps0) ? 1.0 : (eps0 - 1.0) / (eps0 + 1.0);
  return kZeta3 - polylog3(r);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be > 0");
}

}  // namespace

void MatsubaraGrid::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) throw DomainError("temperature must be > 0");
  if (!(rel_tol > 0.0 && rel_tol < 1e-3)) throw ParameterError("rel_tol must lie in (0, 1e-3)");
  if (l_max_cap < 100) throw ParameterError("l_max_cap must be >= 100");
}

double matsubara_frequency(int l, double temperature) {
  if (l < 0) throw DomainError("Matsubara index must be >= 0");
  require_positive(temperature, "temperature");
  return 2.0 * kPi * kConstants.kB * temperature * static_cast<double>(l) / kConstants.hbar;
}

ReflectionPair reflection_coefficients(double eps, double xi, double k_perp) {
  if (!(xi >= 0.0) || !(k_perp >= 0.0)) throw DomainError("frequency and wavenumber must be >= 0");
  if (xi == 0.0 && k_perp == 0.0) throw DomainError("reflection undefined at xi = k_perp = 0");
  if (!(eps >= 1.0)) throw DomainError("permittivity on the imaginary axis must be >= 1");
  if (xi == 0.0) {
    if (std::isinf(eps)) return {1.0, 0.0};
    return {(eps - 1.0) / (eps + 1.0), 0.0};
  }
  const double xi_c = xi / kConstants.c;
  const double q = std::sqrt(k_perp * k_perp + xi_c * xi_c);
  if (std::isinf(eps)) return {1.0, 1.0};
  return fresnel(eps, q, std::sqrt(q * q + (eps - 1.0) * xi_c * xi_c));
}

ReflectionPair reflection_coefficients(const PermittivityModel& model, double xi, double k_perp) {
  if (!(xi >= 0.0) || !(k_perp >= 0.0)) throw DomainError("frequency and wavenumber must be >= 0");
  if (xi == 0.0 && k_perp == 0.0) throw DomainError("reflection undefined at xi = k_perp = 0");
  const double xi_c = xi / kConstants.c;
  return SurfaceResponse(model, xi, 1.0).at(std::sqrt(k_perp * k_perp + xi_c * xi_c));
}

LifshitzResult free_energy_per_area(const HalfspacePair& pair, double z, const MatsubaraGrid& grid,
                                    const QuadratureRule& rule) {
  LifshitzResult r = sum_energy(pair.side_a, pair.side_b, nullptr, z, grid, rule);
  scale(r, kConstants.kB * grid.temperature / (2.0 * kPi));
  return r;
}

LifshitzResult plate_plate_pressure(const HalfspacePair& pair, double z, const MatsubaraGrid& grid,
                                    const QuadratureRule& rule) {
  LifshitzResult r = sum_pressure(pair.side_a, pair.side_b, nullptr, z, grid, rule);
  scale(r, -kConstants.kB * grid.temperature / kPi);
  return r;
}

LifshitzResult sphere_plate_force(const HalfspacePair& pair, double z, const MatsubaraGrid& grid,
                                  const QuadratureRule& rule) {
  if (pair.geometry.kind != Geometry::Kind::sphere_plate) {
    throw ParameterError("sphere_plate_force needs a sphere-plate geometry");
  }
  require_radius(pair.geometry.radius);
  LifshitzResult r = sum_energy(pair.side_a, pair.side_b, nullptr, z, grid, rule);
  scale(r, kConstants.kB * grid.temperature * pair.geometry.radius);
  check_pfa(r, pair.geometry.radius, z);
  return r;
}

LifshitzResult difference_force(const PermittivityModel& sphere, const PermittivityModel& high,
                                const PermittivityModel& low, double radius, double z,
                                const MatsubaraGrid& grid, const QuadratureRule& rule) {
  require_radius(radius);
  LifshitzResult r = sum_energy(sphere, high, &low, z, grid, rule);
  scale(r, kConstants.kB * grid.temperature * radius);
  check_pfa(r, radius, z);
  return r;
}

LifshitzResult difference_pressure(const PermittivityModel& plate, const PermittivityModel& high,
                                   const PermittivityModel& low, double z, const MatsubaraGrid& grid,
                                   const QuadratureRule& rule) {
  LifshitzResult r = sum_pressure(plate, high, &low, z, grid, rule);
  scale(r, -kConstants.kB * grid.temperature / kPi);
  return r;
}

double zero_freq_gap_force(double radius, double z, double temperature, double eps0) {
  require_positive(radius, "radius");
  require_positive(z, "separation");
  require_positive(temperature, "temperature");
  return -kConstants.kB * temperature * radius / (8.0 * z * z) * gap_braces(eps0);
}

double zero_freq_gap_pressure(double z, double temperature, double eps0) {
  require_positive(z, "separation");
  require_positive(temperature, "temperature");
  return -kConstants.kB * temperature / (8.0 * kPi * z * z * z) * gap_braces(eps0);
}

double energy_term(const PermittivityModel& probe, const PermittivityModel& high,
                   const PermittivityModel& low, int l, double z, double temperature,
                   const QuadratureRule& rule) {
  require_separation(z);
  return compute_term(Kind::energy, probe, high, &low, l, z, temperature, rule).value;
}

double energy_term(const PermittivityModel& probe, const PermittivityModel& target, int l, double z,
                   double temperature, const QuadratureRule& rule) {
  require_separation(z);
  return compute_term(Kind::energy, probe, target, nullptr, l, z, temperature, rule).value;
}

double pressure_term(const PermittivityModel& probe, const PermittivityModel& high,
                     const PermittivityModel& low, int l, double z, double temperature,
                     const QuadratureRule& rule) {
  require_separation(z);
  return compute_term(Kind::pressure, probe, high, &low, l, z, temperature, rule).value;
}

double pressure_term(const PermittivityModel& probe, const PermittivityModel& target, int l, double z,
                     double temperature, const QuadratureRule& rule) {
  require_separation(z);
  return compute_term(Kind::pressure, probe, target, nullptr, l, z, temperature, rule).value;
}

}  // namespace casimir::lifshitz
