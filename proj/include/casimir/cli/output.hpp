#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "casimir/cli/config.hpp"
#include "casimir/sweep.hpp"

namespace casimir::cli {

/// Output schema versions. Bump when columns or keys change.
inline constexpr const char* kCurveSchema = "casimir-curve/1";
inline constexpr const char* kCompareSchema = "casimir-compare/1";
inline constexpr const char* kPermittivitySchema = "casimir-permittivity/1";
inline constexpr const char* kRecordSchema = "casimir-record/1";

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Reported magnitudes match the paper figures; values keep their sign.
void write_curve(std::ostream& out, const lifshitz::Curve& curve, const SweepConfig& config, OutputFormat format);

struct ComparisonRow {
  double z;
  double delta_a;
  double delta_b;
  double gap_numeric;
  double gap_analytic;
  double relative_deviation;
};

struct ComparisonReport {
  lifshitz::Quantity quantity = lifshitz::Quantity::force;
  std::vector<ComparisonRow> rows;
  double max_relative_deviation = 0.0;
  double low_static_permittivity = 0.0;
  bool converged = true;
  bool passing = true;  // max_relative_deviation < kGapTolerance
};

inline constexpr double kGapTolerance = 1e-4;

void write_report(std::ostream& out, const ComparisonReport& report, const SweepConfig& config,
                  OutputFormat format);

struct PermittivityRow {
  double xi;  // rad/s
  double eps;
};

struct PermittivityTable {
  std::string material;
  double static_value;  // +inf for conducting models
  std::vector<PermittivityRow> rows;  // includes a xi = 0 row for finite static values
};

void write_permittivity(std::ostream& out, const PermittivityTable& table, OutputFormat format);

struct RecordField {
  std::string name;
  double value;
  std::string unit;
};

/// Flat record for the sensitivity and shift subcommands.
void write_record(std::ostream& out, const std::string& kind, const KeyValues& inputs,
                  const std::vector<RecordField>& fields, OutputFormat format);

}  // namespace casimir::cli
