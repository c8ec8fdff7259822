#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/sweep.hpp"

namespace casimir::cli {

enum class Spacing { linear, log };
enum class LowFrequencyModel { a, b };
enum class OutputFormat { csv, json };

/// Everything a sweep or comparison needs. Defaults reproduce the patterned
/// Si configuration: Au sphere of 100 um over the n1 / dielectric sections at
/// 300 K, 41 log-spaced separations over [100, 300] nm.
struct SweepConfig {
  double z_min = 100e-9;
  double z_max = 300e-9;
  std::size_t n_points = 41;
  Spacing spacing = Spacing::log;
  double temperature = 300.0;
  double sphere_radius = 100e-6;
  std::string sphere = "gold-drude";
  std::string high = "si-doped-n1";
  std::string low = "si-dielectric";  // "none": single-pair curve of `high`
  LowFrequencyModel low_freq_model = LowFrequencyModel::a;
  lifshitz::Quantity quantity = lifshitz::Quantity::force;
  OutputFormat format = OutputFormat::csv;
  std::string output;  // empty: standard output
  double rel_tol = 1e-9;
  int l_max_cap = 20000;
  std::size_t quadrature_nodes = lifshitz::QuadratureRule::kDefaultNodes;
  materials::ZeroFrequencyTE gold_te0 = materials::ZeroFrequencyTE::vanishing;
  std::string optical_table;
  std::map<std::string, materials::DrudeParams> drude_overrides;
  unsigned workers = 0;

  /// Throws UsageError when the invariants do not hold.
  void validate() const;

  /// Canonical key/value listing (SI values with unit suffix), embedded in
  /// every output so curves are self-describing.
  std::vector<std::pair<std::string, std::string>> resolved() const;

  lifshitz::MatsubaraGrid grid() const { return {temperature, rel_tol, l_max_cap}; }
  std::vector<double> separations() const;
  bool has_low() const { return low != "none"; }
};

/// Applies one `key = value` setting. Recognised keys:
///   zmin zmax points spacing temperature radius sphere high low model
///   quantity format out rel_tol l_max_cap nodes gold_te0 optical_table workers
///   drude.<material>.omega_p  drude.<material>.gamma
/// Throws UsageError for unknown keys or malformed values.
void apply_setting(SweepConfig& config, const std::string& key, const std::string& value);

/// Flat `key = value` text, '#' comments, blank lines ignored.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in);
SweepConfig load_config(const std::filesystem::path& path);
void apply_config_file(SweepConfig& config, const std::filesystem::path& path);

/// Catalog model for a role in the config, with overrides, the optical table
/// and the gold zero-frequency TE rule applied.
materials::PermittivityModel resolve_material(const SweepConfig& config, const std::string& name);

}  // namespace casimir::cli
