#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument lies outside the mathematical domain of an operation
/// (negative frequency, zero separation, diverging permittivity, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A model or configuration parameter is out of its allowed range.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace casimir
