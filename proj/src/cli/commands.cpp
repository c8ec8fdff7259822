#include "casimir/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/cli/units.hpp"
#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/experiment.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::cli {

namespace {

using materials::PermittivityModel;

PermittivityModel low_side(const SweepConfig& config, LowFrequencyModel model) {
  PermittivityModel low = resolve_material(config, config.low);
  return model == LowFrequencyModel::b ? low.with_dc_conductivity() : low;
}

lifshitz::SweepRequest make_request(const SweepConfig& config, LowFrequencyModel model) {
  config.validate();
  lifshitz::SweepRequest req{
      .quantity = config.quantity,
      .probe = resolve_material(config, config.sphere),
      .high = resolve_material(config, config.high),
      .low = std::nullopt,
      .radius = config.sphere_radius,
      .grid = config.grid(),
      .separations = config.separations(),
      .workers = config.workers,
  };
  if (config.has_low()) req.low = low_side(config, model);
  return req;
}

// Runs `body` against the configured destination: standard output when the
// path is empty, otherwise a freshly truncated file.
void with_output(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write output file: " + path);
  body(file);
  file.flush();
  if (!file) throw UsageError("error writing output file: " + path);
}

// Options that map one-to-one onto config keys.
struct SettingFlag {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr SettingFlag kSweepFlags[] = {
    {"--format", "format", "csv|json"},
    {"--out", "out", "output file (default: stdout)"},
    {"--temperature", "temperature", "e.g. 300K"},
    {"--model", "model", "low-frequency model of the low section: a|b"},
    {"--radius", "radius", "sphere radius, e.g. 100um"},
    {"--zmin", "zmin", "first separation, e.g. 100nm"},
    {"--zmax", "zmax", "last separation, e.g. 300nm"},
    {"--points", "points", "number of separations"},
    {"--spacing", "spacing", "log|linear"},
    {"--quantity", "quantity", "force|pressure"},
    {"--sphere", "sphere", "probe material (sphere or plate)"},
    {"--material", "high", "high-conductivity plate section"},
    {"--high", "high", "alias of --material"},
    {"--low", "low", "low-conductivity plate section, or none"},
    {"--optical-table", "optical_table", "two-column eV / Im eps file for material 'tabulated'"},
    {"--gold-te0", "gold_te0", "zero-frequency TE rule for gold: drude|plasma"},
    {"--rel-tol", "rel_tol", "Matsubara truncation tolerance"},
    {"--l-max-cap", "l_max_cap", "hard cap on Matsubara terms"},
    {"--nodes", "nodes", "quadrature nodes"},
    {"--workers", "workers", "worker threads (0: all cores)"},
};

class SettingOptions {
 public:
  void add(CLI::App& app, std::initializer_list<const char*> only = {}) {
    for (const auto& f : kSweepFlags) {
      if (only.size() != 0 && std::find_if(only.begin(), only.end(), [&](const char* s) {
                                return std::string(s) == f.flag;
                              }) == only.end()) {
        continue;
      }
      auto& slot = values_.emplace_back(f.key, std::string{});
      app.add_option(f.flag, slot.second, f.help);
      options_.push_back(app.get_option(f.flag));
    }
    app.add_option("--config", config_path_, "key = value config file");
  }

  SweepConfig build() const {
    SweepConfig config;
    if (!config_path_.empty()) apply_config_file(config, config_path_);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (options_[i]->count() > 0) apply_setting(config, values_[i].first, values_[i].second);
    }
    return config;
  }

 private:
  std::string config_path_;
  std::deque<std::pair<std::string, std::string>> values_;
  std::vector<CLI::Option*> options_;
};

int cmd_sweep(const SweepConfig& config, std::ostream& out) {
  const lifshitz::Curve curve = run_sweep(config);
  with_output(config.output, out, [&](std::ostream& o) { write_curve(o, curve, config, config.format); });
  return curve.metadata.converged ? kExitOk : kExitNonConvergence;
}

int cmd_compare(const SweepConfig& config, std::ostream& out) {
  const ComparisonReport report = compare_models(config);
  with_output(config.output, out, [&](std::ostream& o) { write_report(o, report, config, config.format); });
  return report.converged ? kExitOk : kExitNonConvergence;
}

struct CantileverFlags {
  std::string k = "0.03N/m";
  std::string fr = "1130.9Hz";
  std::string q = "5889.2";
  std::string b = "0.3Hz";
  std::string temperature = "77K";

  void add(CLI::App& app, const char* temperature_flag) {
    app.add_option("--k", k, "spring constant")->capture_default_str();
    app.add_option("--fr", fr, "resonance frequency")->capture_default_str();
    app.add_option("--Q", q, "quality factor")->capture_default_str();
    app.add_option("--B", b, "bandwidth")->capture_default_str();
    app.add_option(temperature_flag, temperature, "cantilever temperature")->capture_default_str();
  }

  experiment::CantileverParams params() const {
    experiment::CantileverParams p{
        .spring_constant = parse_quantity(k, Dimension::stiffness),
        .resonance_frequency = parse_quantity(fr, Dimension::frequency),
        .quality_factor = parse_quantity(q, Dimension::dimensionless),
        .bandwidth = parse_quantity(b, Dimension::frequency),
        .temperature = parse_quantity(temperature, Dimension::temperature),
        .mass = std::nullopt,
    };
    try {
      p.validate();
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    return p;
  }

  KeyValues inputs(const experiment::CantileverParams& p) const {
    return {{"k", format_quantity(p.spring_constant, Dimension::stiffness)},
            {"fr", format_quantity(p.resonance_frequency, Dimension::frequency)},
            {"Q", format_number(p.quality_factor)},
            {"B", format_quantity(p.bandwidth, Dimension::frequency)},
            {"cantilever_temperature", format_quantity(p.temperature, Dimension::temperature)}};
  }
};

OutputFormat parse_format(const std::string& text) {
  SweepConfig scratch;
  apply_setting(scratch, "format", text);
  return scratch.format;
}

}  // namespace

lifshitz::Curve run_sweep(const SweepConfig& config) {
  const lifshitz::QuadratureRule rule(config.quadrature_nodes);
  return lifshitz::sweep(make_request(config, config.low_freq_model), rule);
}

ComparisonReport compare_models(const SweepConfig& config) {
  if (!config.has_low()) throw UsageError("compare needs a low section");
  const PermittivityModel low = resolve_material(config, config.low);
  const double eps0 = low.static_permittivity();
  if (std::isinf(eps0)) {
    throw UsageError("compare needs a low section with finite static permittivity; '" + config.low +
                     "' conducts at zero frequency");
  }
  if (!resolve_material(config, config.sphere).conducts_at_zero_frequency()) {
    throw UsageError("compare needs a probe that conducts at zero frequency; '" + config.sphere + "' does not");
  }

  const lifshitz::QuadratureRule rule(config.quadrature_nodes);
  const lifshitz::Curve a = lifshitz::sweep(make_request(config, LowFrequencyModel::a), rule);
  const lifshitz::Curve b = lifshitz::sweep(make_request(config, LowFrequencyModel::b), rule);

  ComparisonReport report;
  report.quantity = config.quantity;
  report.low_static_permittivity = eps0;
  report.converged = a.metadata.converged && b.metadata.converged;
  for (std::size_t i = 0; i < a.separations.size(); ++i) {
    const double z = a.separations[i];
    const double analytic = config.quantity == lifshitz::Quantity::force
                                ? lifshitz::zero_freq_gap_force(config.sphere_radius, z, config.temperature, eps0)
                                : lifshitz::zero_freq_gap_pressure(z, config.temperature, eps0);
    const double numeric = a.values[i] - b.values[i];
    const double dev = std::abs(numeric - analytic) / std::abs(analytic);
    report.rows.push_back({z, a.values[i], b.values[i], numeric, analytic, dev});
    report.max_relative_deviation = std::max(report.max_relative_deviation, dev);
  }
  report.passing = report.max_relative_deviation < kGapTolerance;
  return report;
}

PermittivityTable permittivity_table(const PermittivityModel& model, std::span<const double> xi_grid) {
  PermittivityTable table{model.label(), model.static_permittivity(), {}};
  if (std::isfinite(table.static_value)) table.rows.push_back({0.0, table.static_value});
  for (double xi : xi_grid) {
    if (!(xi > 0.0)) throw UsageError("permittivity grid must be positive");
    table.rows.push_back({xi, model.eval(xi)});
  }
  return table;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-temperature Casimir forces between a metal probe and semiconductor plates", "casimir"};
  app.require_subcommand(1);

  SettingOptions sweep_opts, compare_opts, shift_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "difference (or single-pair) force/pressure curve");
  sweep_opts.add(*sweep_cmd);
  auto* compare_cmd = app.add_subcommand("compare", "model a vs model b gap against the zero-frequency closed form");
  compare_opts.add(*compare_cmd);

  auto* perm_cmd = app.add_subcommand("permittivity", "eps(i xi) table for one material");
  std::string perm_material = "si-dielectric", perm_format = "csv", perm_out, perm_table, perm_config;
  std::string xi_min = "1e13rad/s", xi_max = "1e18rad/s";
  std::size_t perm_points = 51;
  std::vector<std::string> perm_xi;
  perm_cmd->add_option("--material", perm_material, "catalog name")->capture_default_str();
  perm_cmd->add_option("--xi-min", xi_min, "first frequency (rad/s or eV)")->capture_default_str();
  perm_cmd->add_option("--xi-max", xi_max, "last frequency (rad/s or eV)")->capture_default_str();
  perm_cmd->add_option("--points", perm_points, "log-spaced frequencies")->capture_default_str();
  perm_cmd->add_option("--xi", perm_xi, "explicit frequencies (overrides the range)");
  perm_cmd->add_option("--format", perm_format, "csv|json")->capture_default_str();
  perm_cmd->add_option("--out", perm_out, "output file (default: stdout)");
  perm_cmd->add_option("--optical-table", perm_table, "optical data for material 'tabulated'");
  perm_cmd->add_option("--config", perm_config, "config file (Drude overrides, optical table)");

  auto* sens_cmd = app.add_subcommand("sensitivity", "thermal-noise limited force of the cantilever");
  CantileverFlags sens_flags;
  sens_flags.add(*sens_cmd, "--temperature");
  std::string sens_format = "csv", sens_out;
  sens_cmd->add_option("--format", sens_format, "csv|json")->capture_default_str();
  sens_cmd->add_option("--out", sens_out, "output file (default: stdout)");

  auto* shift_cmd = app.add_subcommand("shift", "resonance shift from a force gradient");
  CantileverFlags shift_flags;
  shift_flags.add(*shift_cmd, "--cantilever-temperature");
  std::string gradient_text, z_text;
  shift_cmd->add_option("--gradient", gradient_text, "force gradient, e.g. 1e-6N/m");
  shift_cmd->add_option("--z", z_text, "separation for a computed difference-force gradient");
  shift_opts.add(*shift_cmd, {"--format", "--out", "--temperature", "--model", "--radius", "--sphere", "--material",
                              "--high", "--low", "--optical-table", "--gold-te0", "--rel-tol", "--l-max-cap",
                              "--nodes"});

  auto* list_cmd = app.add_subcommand("materials", "list catalog materials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts.build(), out);
    if (compare_cmd->parsed()) return cmd_compare(compare_opts.build(), out);

    if (perm_cmd->parsed()) {
      SweepConfig config;
      if (!perm_config.empty()) apply_config_file(config, perm_config);
      if (!perm_table.empty()) config.optical_table = perm_table;
      const OutputFormat format = parse_format(perm_format);
      std::vector<double> grid;
      if (!perm_xi.empty()) {
        for (const auto& s : perm_xi) grid.push_back(parse_quantity(s, Dimension::angular_frequency));
      } else {
        const double lo = parse_quantity(xi_min, Dimension::angular_frequency);
        const double hi = parse_quantity(xi_max, Dimension::angular_frequency);
        try {
          grid = lifshitz::log_grid(lo, hi, perm_points);
        } catch (const ParameterError& e) {
          throw UsageError(e.what());
        }
      }
      const PermittivityTable table = permittivity_table(resolve_material(config, perm_material), grid);
      with_output(perm_out, out, [&](std::ostream& o) { write_permittivity(o, table, format); });
      return kExitOk;
    }

    if (sens_cmd->parsed()) {
      const auto p = sens_flags.params();
      const OutputFormat format = parse_format(sens_format);
      const double f_min = experiment::min_detectable_force(p);
      with_output(sens_out, out, [&](std::ostream& o) {
        write_record(o, "sensitivity", sens_flags.inputs(p), {{"min_detectable_force", f_min, "N"}}, format);
      });
      return kExitOk;
    }

    if (shift_cmd->parsed()) {
      const auto p = shift_flags.params();
      SweepConfig config = shift_opts.build();
      config.validate();
      if (gradient_text.empty() == z_text.empty()) throw UsageError("shift needs exactly one of --gradient or --z");
      KeyValues inputs = shift_flags.inputs(p);
      std::vector<RecordField> fields;
      double gradient = 0.0;
      bool converged = true;
      if (!gradient_text.empty()) {
        gradient = parse_quantity(gradient_text, Dimension::stiffness);
        inputs.emplace_back("gradient", format_quantity(gradient, Dimension::stiffness));
      } else {
        if (!config.has_low()) throw UsageError("shift --z needs a low section");
        const double z = parse_quantity(z_text, Dimension::length);
        if (!(z > 0.0)) throw UsageError("--z must be positive");
        const auto probe = resolve_material(config, config.sphere);
        const auto high = resolve_material(config, config.high);
        const auto low = low_side(config, config.low_freq_model);
        const auto grid = config.grid();
        gradient = experiment::difference_force_gradient(probe, high, low, config.sphere_radius, z, grid);
        const auto df = lifshitz::difference_force(probe, high, low, config.sphere_radius, z, grid);
        const auto dp = lifshitz::difference_pressure(probe, high, low, z, grid);
        converged = df.truncation.converged && dp.truncation.converged;
        for (const auto& [k, v] : config.resolved()) {
          if (k == "zmin" || k == "zmax" || k == "points" || k == "spacing" || k == "quantity") continue;
          inputs.emplace_back(k, v);
        }
        inputs.emplace_back("z", format_quantity(z, Dimension::length));
        fields.push_back({"difference_force", df.value, "N"});
        fields.push_back({"force_gradient", gradient, "N/m"});
        fields.push_back({"difference_pressure", dp.value, "Pa"});
      }
      const auto shift = experiment::resonance_shift(p, gradient);
      fields.push_back({"frequency_shift", shift.shift_hz, "Hz"});
      fields.push_back({"linear_regime", shift.linear_regime ? 1.0 : 0.0, ""});
      fields.push_back({"equivalent_pressure", experiment::pressure_from_force_gradient(config.sphere_radius, gradient),
                        "Pa"});
      with_output(config.output, out, [&](std::ostream& o) { write_record(o, "shift", inputs, fields, config.format); });
      return converged ? kExitOk : kExitNonConvergence;
    }

    if (list_cmd->parsed()) {
      out << "name,static_permittivity,conducts_at_zero_frequency,note\n";
      for (const auto& name : materials::catalog_names()) {
        out << name;
        try {
          const auto m = materials::build_material(name);
          const double e0 = m.static_permittivity();
          out << ',' << (std::isinf(e0) ? std::string("inf") : format_number(e0)) << ','
              << (m.conducts_at_zero_frequency() ? "true" : "false") << ",\n";
        } catch (const ParameterError&) {
          out << ",,," << (name == "tabulated" ? "needs --optical-table" : "needs Drude parameters") << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace casimir::cli
