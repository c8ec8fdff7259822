#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casimir::cli {

/// Malformed command line or configuration (exit status 1).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class Dimension {
  length,             // m, cm, mm, um, nm
  temperature,        // K
  angular_frequency,  // rad/s, eV
  frequency,          // Hz, kHz, MHz
  stiffness,          // N/m (spring constants and force gradients)
  dimensionless,
};

/// Parses "<number>[ ]<unit>" into SI units. Physical dimensions require an
/// explicit unit; dimensionless values must not carry one. Throws UsageError.
double parse_quantity(std::string_view text, Dimension dimension);

/// "%.11e" followed by the SI unit: 12 significant digits.
std::string format_quantity(double value, Dimension dimension);
std::string format_number(double value);

/// value rounded to 12 significant digits (what format_number prints).
double round_significant(double value);

}  // namespace casimir::cli
