#include "casimir/cli/output.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "casimir/cli/units.hpp"
#include "casimir/constants.hpp"

namespace casimir::cli {

namespace {

using nlohmann::ordered_json;

const char* quantity_name(lifshitz::Quantity q) {
  return q == lifshitz::Quantity::force ? "force" : "pressure";
}

const char* quantity_unit(lifshitz::Quantity q) { return q == lifshitz::Quantity::force ? "N" : "Pa"; }

// JSON numbers go through the same 12-digit rounding as CSV text; infinities
// become the string "inf".
ordered_json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return round_significant(v);
}

std::string text(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_number(v);
}

void write_header(std::ostream& out, const char* schema, const KeyValues& entries) {
  out << "# schema = " << schema << '\n';
  for (const auto& [k, v] : entries) out << "# " << k << " = " << v << '\n';
}

ordered_json config_object(const KeyValues& entries) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : entries) obj[k] = v;
  return obj;
}

}  // namespace

void write_curve(std::ostream& out, const lifshitz::Curve& curve, const SweepConfig& config, OutputFormat format) {
  const auto& meta = curve.metadata;
  KeyValues summary = {
      {"materials", ""},
      {"max_terms", std::to_string(meta.max_terms)},
      {"worst_truncation", format_number(meta.worst_truncation)},
      {"converged", meta.converged ? "true" : "false"},
  };
  for (std::size_t i = 0; i < meta.materials.size(); ++i) {
    summary[0].second += (i ? ", " : "") + meta.materials[i];
  }
  const std::string unit = quantity_unit(meta.quantity);

  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema"] = kCurveSchema;
    doc["config"] = config_object(config.resolved());
    doc["quantity"] = quantity_name(meta.quantity);
    doc["unit"] = unit;
    doc["materials"] = meta.materials;
    doc["summary"] = {{"max_terms", meta.max_terms},
                      {"worst_truncation", number(meta.worst_truncation)},
                      {"converged", meta.converged}};
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < curve.separations.size(); ++i) {
      rows.push_back({{"z_m", number(curve.separations[i])},
                      {"value", number(curve.values[i])},
                      {"magnitude", number(std::abs(curve.values[i]))},
                      {"terms", curve.diagnostics[i].terms},
                      {"truncation_ratio", number(curve.diagnostics[i].last_term_ratio)},
                      {"converged", curve.diagnostics[i].converged}});
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }

  KeyValues header = config.resolved();
  header.insert(header.end(), summary.begin(), summary.end());
  write_header(out, kCurveSchema, header);
  out << "z_m,value_" << unit << ",magnitude_" << unit << ",terms,truncation_ratio,converged\n";
  for (std::size_t i = 0; i < curve.separations.size(); ++i) {
    out << text(curve.separations[i]) << ',' << text(curve.values[i]) << ',' << text(std::abs(curve.values[i]))
        << ',' << curve.diagnostics[i].terms << ',' << text(curve.diagnostics[i].last_term_ratio) << ','
        << (curve.diagnostics[i].converged ? 1 : 0) << '\n';
  }
}

void write_report(std::ostream& out, const ComparisonReport& report, const SweepConfig& config,
                  OutputFormat format) {
  const std::string unit = quantity_unit(report.quantity);
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema"] = kCompareSchema;
    doc["config"] = config_object(config.resolved());
    doc["quantity"] = quantity_name(report.quantity);
    doc["unit"] = unit;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"z_m", number(r.z)},
                      {"delta_a", number(r.delta_a)},
                      {"delta_b", number(r.delta_b)},
                      {"gap_numeric", number(r.gap_numeric)},
                      {"gap_analytic", number(r.gap_analytic)},
                      {"relative_deviation", number(r.relative_deviation)}});
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = {{"low_static_permittivity", number(report.low_static_permittivity)},
                      {"max_relative_deviation", number(report.max_relative_deviation)},
                      {"tolerance", number(kGapTolerance)},
                      {"converged", report.converged},
                      {"passing", report.passing}};
    out << doc.dump(2) << '\n';
    return;
  }

  KeyValues header = config.resolved();
  header.emplace_back("low_static_permittivity", text(report.low_static_permittivity));
  write_header(out, kCompareSchema, header);
  out << "z_m,delta_a_" << unit << ",delta_b_" << unit << ",gap_numeric_" << unit << ",gap_analytic_" << unit
      << ",relative_deviation\n";
  for (const auto& r : report.rows) {
    out << text(r.z) << ',' << text(r.delta_a) << ',' << text(r.delta_b) << ',' << text(r.gap_numeric) << ','
        << text(r.gap_analytic) << ',' << text(r.relative_deviation) << '\n';
  }
  out << "# max_relative_deviation = " << text(report.max_relative_deviation) << '\n';
  out << "# tolerance = " << text(kGapTolerance) << '\n';
  out << "# converged = " << (report.converged ? "true" : "false") << '\n';
  out << "# passing = " << (report.passing ? "true" : "false") << '\n';
}

void write_permittivity(std::ostream& out, const PermittivityTable& table, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema"] = kPermittivitySchema;
    doc["material"] = table.material;
    doc["static_permittivity"] = number(table.static_value);
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"xi_rad_s", number(r.xi)}, {"xi_eV", number(rad_s_to_ev(r.xi))}, {"eps", number(r.eps)}});
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  write_header(out, kPermittivitySchema,
               {{"material", table.material}, {"static_permittivity", text(table.static_value)}});
  out << "xi_rad_s,xi_eV,eps\n";
  for (const auto& r : table.rows) {
    out << text(r.xi) << ',' << text(rad_s_to_ev(r.xi)) << ',' << text(r.eps) << '\n';
  }
}

void write_record(std::ostream& out, const std::string& kind, const KeyValues& inputs,
                  const std::vector<RecordField>& fields, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["schema"] = kRecordSchema;
    doc["kind"] = kind;
    doc["inputs"] = config_object(inputs);
    ordered_json values = ordered_json::object();
    for (const auto& f : fields) values[f.name] = {{"value", number(f.value)}, {"unit", f.unit}};
    doc["values"] = std::move(values);
    out << doc.dump(2) << '\n';
    return;
  }
  KeyValues header = {{"kind", kind}};
  header.insert(header.end(), inputs.begin(), inputs.end());
  write_header(out, kRecordSchema, header);
  out << "name,value,unit\n";
  for (const auto& f : fields) out << f.name << ',' << text(f.value) << ',' << f.unit << '\n';
}

}  // namespace casimir::cli
