#include "casimir/materials.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <type_traits>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::materials {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

void validate(const DrudeParams& d, const std::string& who) {
  require(std::isfinite(d.omega_p) && d.omega_p > 0.0, who + ": Drude plasma frequency must be > 0");
  require(std::isfinite(d.gamma) && d.gamma >= 0.0, who + ": Drude relaxation must be >= 0");
}

void validate(const OscillatorBackground& bg, const std::string& who) {
  for (const auto& o : bg.oscillators) {
    require(std::isfinite(o.omega) && o.omega > 0.0, who + ": oscillator frequency must be > 0");
    require(std::isfinite(o.damping) && o.damping >= 0.0, who + ": oscillator damping must be >= 0");
    require(std::isfinite(o.strength) && o.strength >= 0.0, who + ": oscillator strength must be >= 0");
  }
  require(bg.tail.eps_inf >= 1.0, who + ": eps_inf must be >= 1");
  require(std::isfinite(bg.tail.omega_inf) && bg.tail.omega_inf > 0.0, who + ": omega_inf must be > 0");
}

double oscillator_eval(const OscillatorBackground& bg, double xi) {
  double eps = 1.0;
  for (const auto& o : bg.oscillators) {
    const double u = xi / o.omega;
    eps += o.strength / (1.0 + u * u + o.damping * u);
  }
  const double v = xi / bg.tail.omega_inf;
  return eps + (bg.tail.eps_inf - 1.0) / (1.0 + v * v);
}

double oscillator_static(const OscillatorBackground& bg) {
  return std::accumulate(bg.oscillators.begin(), bg.oscillators.end(), bg.tail.eps_inf,
                         [](double acc, const OscillatorParams& o) { return acc + o.strength; });
}

OscillatorBackground from_ev_rows(const std::vector<OscillatorRowEv>& rows, double eps_inf,
                                  double omega_inf_ev) {
  OscillatorBackground bg;
  bg.oscillators.reserve(rows.size());
  for (const auto& r : rows) bg.oscillators.push_back({ev_to_rad_s(r.omega_ev), r.damping, r.strength});
  bg.tail = {eps_inf, ev_to_rad_s(omega_inf_ev)};
  return bg;
}

}  // namespace

PermittivityModel::PermittivityModel(std::string label, std::optional<Background> background,
                                     std::optional<DrudeParams> drude)
    : label_(std::move(label)), background_(std::move(background)), drude_(drude) {
  if (drude_) validate(*drude_, label_);
  if (background_) {
    if (const auto* osc = std::get_if<OscillatorBackground>(&*background_)) validate(*osc, label_);
    if (const auto* tab = std::get_if<TabulatedBackground>(&*background_)) {
      require(tab->table != nullptr, label_ + ": tabulated background without a table");
    }
  }
}

bool PermittivityModel::is_perfect_conductor() const {
  return background_ && std::holds_alternative<PerfectConductor>(*background_);
}

bool PermittivityModel::conducts_at_zero_frequency() const {
  if (drude_ || dc_conductivity_ || is_perfect_conductor()) return true;
  return std::isinf(static_permittivity());
}

double PermittivityModel::background_eval(double xi) const {
  if (!background_) return 1.0;
  return std::visit(
      [xi](const auto& bg) -> double {
        using T = std::decay_t<decltype(bg)>;
        if constexpr (std::is_same_v<T, OscillatorBackground>) {
          return oscillator_eval(bg, xi);
        } else if constexpr (std::is_same_v<T, TabulatedBackground>) {
          return xi == 0.0 ? kk_static_limit(*bg.table) : kk_to_imaginary_axis(*bg.table, xi);
        } else {
          return kInf;
        }
      },
      *background_);
}

double PermittivityModel::eval(double xi) const {
  if (!(xi >= 0.0)) throw DomainError(label_ + ": permittivity requested at negative frequency");
  if (xi == 0.0 && conducts_at_zero_frequency()) {
    throw DomainError(label_ + ": permittivity diverges at zero frequency; use the static reflection limits");
  }
  double eps = background_eval(xi);
  if (drude_) eps += drude_->omega_p * drude_->omega_p / (xi * (xi + drude_->gamma));
  return eps;
}

double PermittivityModel::static_permittivity() const {
  if (drude_ || dc_conductivity_ || is_perfect_conductor()) return kInf;
  if (!background_) return 1.0;
  if (const auto* osc = std::get_if<OscillatorBackground>(&*background_)) return oscillator_static(*osc);
  return background_eval(0.0);
}

PermittivityModel PermittivityModel::with_dc_conductivity() const {
  PermittivityModel copy = *this;
  copy.dc_conductivity_ = true;
  copy.label_ = label_ + "+dc";
  return copy;
}

PermittivityModel PermittivityModel::with_zero_frequency_te(ZeroFrequencyTE rule) const {
  PermittivityModel copy = *this;
  copy.zero_frequency_te_ = rule;
  return copy;
}

PermittivityModel PermittivityModel::with_label(std::string label) const {
  PermittivityModel copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

OscillatorBackground silicon_core() {
  return OscillatorBackground{{}, {kSiliconStaticPermittivity, kSiliconUvFrequency}};
}

std::vector<OscillatorRowEv> vo2_insulator_table() {
  return {
      {1.02, 0.55, 0.79},  {1.30, 0.55, 0.474}, {1.50, 0.50, 0.483}, {2.75, 0.22, 0.536},
      {3.49, 0.47, 1.316}, {3.76, 0.38, 1.060}, {5.1, 0.385, 0.99},
  };
}

std::vector<OscillatorRowEv> vo2_metal_table() {
  return {
      {0.86, 0.95, 1.816},
      {2.8, 0.23, 0.972},
      {3.48, 0.28, 1.04},
      {4.6, 0.34, 1.05},
  };
}

namespace {

constexpr double kVo2OmegaInfEv = 15.0;

DrudeParams drude_or(const MaterialSpec& spec, DrudeParams fallback) {
  return spec.drude.value_or(fallback);
}

PermittivityModel build_base(const MaterialSpec& spec) {
  const std::string& name = spec.name;
  if (name == "gold-drude") {
    return {name, std::nullopt, drude_or(spec, {ev_to_rad_s(9.0), ev_to_rad_s(0.035)})};
  }
  if (name == "ideal-metal") return {name, Background{PerfectConductor{}}, std::nullopt};
  if (name == "si-dielectric") return {name, Background{silicon_core()}, std::nullopt};
  if (name == "si-doped-n1") return {name, Background{silicon_core()}, drude_or(spec, {2.0e15, 2.4e14})};
  if (name == "si-doped-n2") return {name, Background{silicon_core()}, drude_or(spec, {6.3e14, 1.8e13})};
  if (name == "si-doped-low") return {name, Background{silicon_core()}, drude_or(spec, {3.5e13, 1.8e13})};
  if (name == "si-doped") {
    require(spec.drude.has_value(), "si-doped needs Drude parameters");
    return {name, Background{silicon_core()}, spec.drude};
  }
  if (name == "vo2-insulator") {
    return {name, Background{from_ev_rows(vo2_insulator_table(), 4.26, kVo2OmegaInfEv)}, spec.drude};
  }
  if (name == "vo2-metal") {
    return {name, Background{from_ev_rows(vo2_metal_table(), 3.95, kVo2OmegaInfEv)},
            drude_or(spec, {ev_to_rad_s(3.33), ev_to_rad_s(0.66)})};
  }
  if (name == "tabulated") {
    require(spec.table != nullptr, "tabulated material needs an optical data table");
    return {name, Background{TabulatedBackground{spec.table}}, spec.drude};
  }
  throw ParameterError("unknown material: " + name);
}

}  // namespace

PermittivityModel build_material(const MaterialSpec& spec) {
  PermittivityModel model = build_base(spec).with_zero_frequency_te(spec.zero_frequency_te);
  return spec.dc_conductivity ? model.with_dc_conductivity() : model;
}

PermittivityModel build_material(std::string_view name) {
  MaterialSpec spec;
  spec.name = std::string(name);
  return build_material(spec);
}

std::vector<std::string> catalog_names() {
  return {"gold-drude",  "ideal-metal",  "si-dielectric", "si-doped-n1",   "si-doped-n2",
          "si-doped-low", "si-doped",    "vo2-insulator", "vo2-metal",     "tabulated"};
}

double plasma_frequency(const CarrierParams& params) {
  require(params.density > 0.0, "carrier density must be > 0");
  require(params.effective_mass > 0.0, "effective mass must be > 0");
  const auto& k = kConstants;
  return std::sqrt(params.density * k.e * k.e / (k.eps0 * params.effective_mass));
}

double scattering_time(double conductivity, double omega_p) {
  require(conductivity > 0.0, "conductivity must be > 0");
  require(omega_p > 0.0, "plasma frequency must be > 0");
  return conductivity / (kConstants.eps0 * omega_p * omega_p);
}

}  // namespace casimir::materials
