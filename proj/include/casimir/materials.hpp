#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casimir/optical_table.hpp"

namespace casimir::materials {

/// Free-carrier term omega_p^2 / [xi (xi + gamma)], both in rad/s.
struct DrudeParams {
  double omega_p;
  double gamma;
};

/// One Lorentz oscillator on the imaginary axis:
/// strength / (1 + xi^2/omega^2 + damping * xi/omega).
struct OscillatorParams {
  double omega;     // rad/s
  double damping;   // dimensionless
  double strength;  // dimensionless
};

/// (eps_inf - 1) / (1 + xi^2/omega_inf^2): high-frequency electronic transitions.
struct HighFreqTail {
  double eps_inf;
  double omega_inf;  // rad/s
};

struct CarrierParams {
  double density;         // m^-3
  double effective_mass;  // kg
  std::optional<double> conductivity;  // S/m
};

/// 1 + sum of oscillators + tail. With no oscillators this is the
/// single-oscillator form used for the dielectric Si core.
struct OscillatorBackground {
  std::vector<OscillatorParams> oscillators;
  HighFreqTail tail;
};

struct TabulatedBackground {
  std::shared_ptr<const OpticalDataTable> table;
};

/// eps -> infinity at every frequency.
struct PerfectConductor {};

using Background = std::variant<OscillatorBackground, TabulatedBackground, PerfectConductor>;

/// Zero-frequency transverse-electric reflection rule for conducting models.
enum class ZeroFrequencyTE {
  vanishing,     // r_TE(0, k) = 0 (Drude behaviour)
  plasma_limit,  // r_TE(0, k) from the plasma model with the Drude omega_p
};

/// Dielectric permittivity along the imaginary frequency axis.
///
/// Immutable after construction; eval() is a pure function and safe to call
/// concurrently. A model "conducts at zero frequency" when it has a Drude term,
/// the dc-conductivity flag, or is a perfect conductor; its static permittivity
/// is then +infinity and eval(0) throws.
class PermittivityModel {
 public:
  PermittivityModel(std::string label, std::optional<Background> background,
                    std::optional<DrudeParams> drude);

  /// eps(i xi). Throws DomainError for xi < 0, and for xi = 0 when the model
  /// conducts at zero frequency. Returns +infinity for a perfect conductor.
  double eval(double xi) const;

  /// eps(0), or +infinity for conducting models.
  double static_permittivity() const;
  bool conducts_at_zero_frequency() const;
  bool is_perfect_conductor() const;

  /// Same permittivity at xi > 0, but the static limit is replaced by the
  /// divergence of a dc conductivity. This is how the "dc conductivity
  /// included" description of a poorly conducting material differs from the
  /// finite-static-permittivity one: only the zero-frequency term changes.
  PermittivityModel with_dc_conductivity() const;
  PermittivityModel with_zero_frequency_te(ZeroFrequencyTE rule) const;
  PermittivityModel with_label(std::string label) const;

  const std::string& label() const { return label_; }
  const std::optional<Background>& background() const { return background_; }
  const std::optional<DrudeParams>& drude() const { return drude_; }
  bool dc_conductivity() const { return dc_conductivity_; }
  ZeroFrequencyTE zero_frequency_te() const { return zero_frequency_te_; }

 private:
  double background_eval(double xi) const;

  std::string label_;
  std::optional<Background> background_;
  std::optional<DrudeParams> drude_;
  bool dc_conductivity_ = false;
  ZeroFrequencyTE zero_frequency_te_ = ZeroFrequencyTE::vanishing;
};

/// Catalog request. `drude` overrides the catalog Drude parameters (and is
/// required for the generic "si-doped" entry); `table` is required for
/// "tabulated".
struct MaterialSpec {
  std::string name;
  std::optional<DrudeParams> drude;
  std::shared_ptr<const OpticalDataTable> table;
  ZeroFrequencyTE zero_frequency_te = ZeroFrequencyTE::vanishing;
  bool dc_conductivity = false;
};

/// Catalog entries:
///   gold-drude      Drude Au, omega_p = 9.0 eV, gamma = 0.035 eV
///   ideal-metal     perfect conductor
///   si-dielectric   high-resistivity Si, eps(0) = 11.66
///   si-doped-n1     Si core + Drude(2.0e15, 2.4e14 rad/s)
///   si-doped-n2     Si core + Drude(6.3e14, 1.8e13 rad/s)
///   si-doped-low    Si core + Drude(3.5e13, 1.8e13 rad/s)
///   si-doped        Si core + user Drude parameters
///   vo2-insulator   7 oscillators + tail, before the phase transition
///   vo2-metal       4 oscillators + tail + Drude(3.33 eV, 0.66 eV), after it
///   tabulated       Kramers-Kronig transform of a user optical table
/// Throws ParameterError for unknown names or out-of-range parameters.
PermittivityModel build_material(const MaterialSpec& spec);
PermittivityModel build_material(std::string_view name);

std::vector<std::string> catalog_names();

/// Silicon core on the imaginary axis: 1 + (11.66 - 1)/(1 + xi^2/omega_uv^2).
OscillatorBackground silicon_core();
inline constexpr double kSiliconStaticPermittivity = 11.66;
inline constexpr double kSiliconUvFrequency = 6.6e15;  // rad/s

/// Table rows in the units they are published in: omega in eV.
struct OscillatorRowEv {
  double omega_ev;
  double damping;
  double strength;
};
std::vector<OscillatorRowEv> vo2_insulator_table();
std::vector<OscillatorRowEv> vo2_metal_table();

/// omega_p = sqrt(n e^2 / (eps0 m_eff)). Throws ParameterError for n <= 0 or m <= 0.
double plasma_frequency(const CarrierParams& params);

/// tau = sigma / (eps0 omega_p^2). Throws ParameterError for non-positive inputs.
double scattering_time(double conductivity, double omega_p);

/// eps(0), or +infinity for models with a Drude term or dc conductivity.
inline double static_permittivity(const PermittivityModel& model) {
  return model.static_permittivity();
}

inline double eval_permittivity(const PermittivityModel& model, double xi) {
  return model.eval(xi);
}

inline constexpr double kSiliconEffectiveMassRatio = 0.26;

}  // namespace casimir::materials
