#include "casimir/cli/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "casimir/constants.hpp"

namespace casimir::cli {

namespace {

struct UnitFactor {
  std::string_view name;
  Dimension dimension;
  double factor;
};

const std::array<UnitFactor, 14> kUnits = {{
    {"m", Dimension::length, 1.0},
    {"cm", Dimension::length, 1e-2},
    {"mm", Dimension::length, 1e-3},
    {"um", Dimension::length, 1e-6},
    {"\xC2\xB5m", Dimension::length, 1e-6},  // micro sign
    {"\xCE\xBCm", Dimension::length, 1e-6},  // greek mu
    {"nm", Dimension::length, 1e-9},
    {"K", Dimension::temperature, 1.0},
    {"rad/s", Dimension::angular_frequency, 1.0},
    {"eV", Dimension::angular_frequency, kConstants.eV_to_rad_s},
    {"Hz", Dimension::frequency, 1.0},
    {"kHz", Dimension::frequency, 1e3},
    {"MHz", Dimension::frequency, 1e6},
    {"N/m", Dimension::stiffness, 1.0},
}};

std::string_view si_unit(Dimension d) {
  switch (d) {
    case Dimension::length: return "m";
    case Dimension::temperature: return "K";
    case Dimension::angular_frequency: return "rad/s";
    case Dimension::frequency: return "Hz";
    case Dimension::stiffness: return "N/m";
    case Dimension::dimensionless: return "";
  }
  return "";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_quantity(std::string_view text, Dimension dimension) {
  const std::string_view s = trim(text);
  double number = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec != std::errc() || !std::isfinite(number)) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
  const std::string_view unit = trim(std::string_view(end, static_cast<std::size_t>(s.data() + s.size() - end)));
  if (dimension == Dimension::dimensionless) {
    if (!unit.empty()) throw UsageError("unexpected unit in '" + std::string(text) + "'");
    return number;
  }
  if (unit.empty()) {
    throw UsageError("missing unit in '" + std::string(text) + "' (expected e.g. " +
                     std::string(si_unit(dimension)) + ")");
  }
  for (const auto& u : kUnits) {
    if (u.name == unit) {
      if (u.dimension != dimension) throw UsageError("wrong unit in '" + std::string(text) + "'");
      return number * u.factor;
    }
  }
  throw UsageError("unknown unit '" + std::string(unit) + "'");
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  if (value == 0.0) value = 0.0;  // no "-0"
  std::snprintf(buf.data(), buf.size(), "%.11e", value);
  return buf.data();
}

std::string format_quantity(double value, Dimension dimension) {
  const auto unit = si_unit(dimension);
  return unit.empty() ? format_number(value) : format_number(value) + " " + std::string(unit);
}

double round_significant(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

}  // namespace casimir::cli
