#include "casimir/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <memory>

#include "casimir/cli/units.hpp"
#include "casimir/error.hpp"

namespace casimir::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long parse_integer(const std::string& key, const std::string& value) {
  const double v = parse_quantity(value, Dimension::dimensionless);
  if (v != std::floor(v)) throw UsageError(key + " must be an integer");
  return static_cast<long>(v);
}

template <class Enum>
Enum parse_choice(const std::string& key, const std::string& value,
                  std::initializer_list<std::pair<const char*, Enum>> choices) {
  for (const auto& [name, e] : choices) {
    if (value == name) return e;
  }
  std::string allowed;
  for (const auto& c : choices) allowed += (allowed.empty() ? "" : "|") + std::string(c.first);
  throw UsageError(key + " must be one of " + allowed + ", got '" + value + "'");
}

}  // namespace

void SweepConfig::validate() const {
  if (!(z_min > 0.0) || !(z_max > z_min)) throw UsageError("need 0 < zmin < zmax");
  if (n_points < 2) throw UsageError("points must be >= 2");
  if (!(temperature > 0.0)) throw UsageError("temperature must be > 0");
  if (!(sphere_radius > 0.0)) throw UsageError("radius must be > 0");
  if (!(rel_tol > 0.0 && rel_tol < 1e-3)) throw UsageError("rel_tol must lie in (0, 1e-3)");
  if (l_max_cap < 100) throw UsageError("l_max_cap must be >= 100");
  if (quadrature_nodes < 8) throw UsageError("nodes must be >= 8");
}

std::vector<double> SweepConfig::separations() const {
  return spacing == Spacing::log ? lifshitz::log_grid(z_min, z_max, n_points)
                                 : lifshitz::linear_grid(z_min, z_max, n_points);
}

std::vector<std::pair<std::string, std::string>> SweepConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> out = {
      {"quantity", quantity == lifshitz::Quantity::force ? "force" : "pressure"},
      {"zmin", format_quantity(z_min, Dimension::length)},
      {"zmax", format_quantity(z_max, Dimension::length)},
      {"points", std::to_string(n_points)},
      {"spacing", spacing == Spacing::log ? "log" : "linear"},
      {"temperature", format_quantity(temperature, Dimension::temperature)},
      {"radius", format_quantity(sphere_radius, Dimension::length)},
      {"sphere", sphere},
      {"high", high},
      {"low", low},
      {"model", low_freq_model == LowFrequencyModel::a ? "a" : "b"},
      {"rel_tol", format_number(rel_tol)},
      {"l_max_cap", std::to_string(l_max_cap)},
      {"nodes", std::to_string(quadrature_nodes)},
      {"gold_te0", gold_te0 == materials::ZeroFrequencyTE::vanishing ? "drude" : "plasma"},
  };
  if (!optical_table.empty()) out.emplace_back("optical_table", optical_table);
  for (const auto& [name, d] : drude_overrides) {
    out.emplace_back("drude." + name + ".omega_p", format_quantity(d.omega_p, Dimension::angular_frequency));
    out.emplace_back("drude." + name + ".gamma", format_quantity(d.gamma, Dimension::angular_frequency));
  }
  return out;
}

void apply_setting(SweepConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "zmin") {
    c.z_min = parse_quantity(value, Dimension::length);
  } else if (key == "zmax") {
    c.z_max = parse_quantity(value, Dimension::length);
  } else if (key == "points") {
    const long n = parse_integer(key, value);
    if (n < 2) throw UsageError("points must be >= 2");
    c.n_points = static_cast<std::size_t>(n);
  } else if (key == "spacing") {
    c.spacing = parse_choice(key, value, {std::pair{"log", Spacing::log}, std::pair{"linear", Spacing::linear}});
  } else if (key == "temperature") {
    c.temperature = parse_quantity(value, Dimension::temperature);
  } else if (key == "radius") {
    c.sphere_radius = parse_quantity(value, Dimension::length);
  } else if (key == "sphere") {
    c.sphere = value;
  } else if (key == "high" || key == "material") {
    c.high = value;
  } else if (key == "low") {
    c.low = value;
  } else if (key == "model") {
    c.low_freq_model = parse_choice(key, value, {std::pair{"a", LowFrequencyModel::a}, std::pair{"b", LowFrequencyModel::b}});
  } else if (key == "quantity") {
    c.quantity = parse_choice(key, value, {std::pair{"force", lifshitz::Quantity::force},
                                           std::pair{"pressure", lifshitz::Quantity::pressure}});
  } else if (key == "format") {
    c.format = parse_choice(key, value, {std::pair{"csv", OutputFormat::csv}, std::pair{"json", OutputFormat::json}});
  } else if (key == "out") {
    c.output = value;
  } else if (key == "rel_tol") {
    c.rel_tol = parse_quantity(value, Dimension::dimensionless);
  } else if (key == "l_max_cap") {
    c.l_max_cap = static_cast<int>(parse_integer(key, value));
  } else if (key == "nodes") {
    const long n = parse_integer(key, value);
    if (n < 8) throw UsageError("nodes must be >= 8");
    c.quadrature_nodes = static_cast<std::size_t>(n);
  } else if (key == "gold_te0") {
    c.gold_te0 = parse_choice(key, value, {std::pair{"drude", materials::ZeroFrequencyTE::vanishing},
                                           std::pair{"plasma", materials::ZeroFrequencyTE::plasma_limit}});
  } else if (key == "optical_table") {
    c.optical_table = value;
  } else if (key == "workers") {
    const long n = parse_integer(key, value);
    if (n < 0) throw UsageError("workers must be >= 0");
    c.workers = static_cast<unsigned>(n);
  } else if (key.rfind("drude.", 0) == 0) {
    const auto dot = key.rfind('.');
    const std::string material = key.substr(6, dot - 6);
    const std::string field = key.substr(dot + 1);
    if (material.empty() || dot <= 6) throw UsageError("malformed key: " + key);
    auto it = c.drude_overrides.find(material);
    if (it == c.drude_overrides.end()) {
      // Start from the catalog values so one field can be overridden alone.
      materials::DrudeParams base{1.0, 0.0};
      try {
        if (auto d = materials::build_material(material).drude()) base = *d;
      } catch (const ParameterError&) {
      }
      it = c.drude_overrides.emplace(material, base).first;
    }
    const double v = parse_quantity(value, Dimension::angular_frequency);
    if (field == "omega_p") {
      it->second.omega_p = v;
    } else if (field == "gamma") {
      it->second.gamma = v;
    } else {
      throw UsageError("unknown Drude field: " + field);
    }
  } else {
    throw UsageError("unknown config key: " + key);
  }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    entries.emplace_back(std::move(key), trim(line.substr(eq + 1)));
  }
  return entries;
}

void apply_config_file(SweepConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path.string());
  for (const auto& [key, value] : parse_config_text(in)) apply_setting(config, key, value);
}

SweepConfig load_config(const std::filesystem::path& path) {
  SweepConfig config;
  apply_config_file(config, path);
  return config;
}

materials::PermittivityModel resolve_material(const SweepConfig& config, const std::string& name) {
  try {
    materials::MaterialSpec spec;
    spec.name = name;
    if (auto it = config.drude_overrides.find(name); it != config.drude_overrides.end()) {
      spec.drude = it->second;
    }
    if (name == "tabulated") {
      if (config.optical_table.empty()) throw UsageError("material 'tabulated' needs --optical-table");
      spec.table = std::make_shared<const materials::OpticalDataTable>(
          materials::load_optical_table(config.optical_table));
    }
    if (name == "gold-drude") spec.zero_frequency_te = config.gold_te0;
    return materials::build_material(spec);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace casimir::cli
