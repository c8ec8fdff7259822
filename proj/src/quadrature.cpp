#include "casimir/quadrature.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::lifshitz {

namespace {
constexpr double kLowerU = -4.5;
constexpr double kUpperU = 2.3;
}  // namespace

QuadratureRule::QuadratureRule(std::size_t nodes) {
  if (nodes < 8) throw ParameterError("quadrature needs at least 8 nodes");
  nodes_.reserve(nodes);
  weights_.reserve(nodes);
  const double h = (kUpperU - kLowerU) / static_cast<double>(nodes - 1);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double u = kLowerU + h * static_cast<double>(i);
    const double t = std::exp(0.5 * kPi * std::sinh(u));
    nodes_.push_back(t);
    weights_.push_back(h * 0.5 * kPi * std::cosh(u) * t);
  }
}

const QuadratureRule& QuadratureRule::standard() {
  static const QuadratureRule rule;
  return rule;
}

}  // namespace casimir::lifshitz
