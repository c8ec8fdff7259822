#pragma once

#include <cstddef>
#include <vector>

namespace casimir::lifshitz {

/// Fixed-node rule for integral_0^inf f(t) dt.
///
/// Exp-sinh (double-exponential) substitution t = exp(pi/2 sinh u), trapezoidal
/// in u over [-4.5, 2.3]. Handles the t ln t endpoint behaviour of the
/// zero-frequency perfect-reflector integrand and the e^-t decay of every
/// Lifshitz integrand; 120 nodes give ~1e-14 relative on both.
class QuadratureRule {
 public:
  static constexpr std::size_t kDefaultNodes = 120;

  explicit QuadratureRule(std::size_t nodes = kDefaultNodes);

  /// Shared default-size rule.
  static const QuadratureRule& standard();

  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace casimir::lifshitz
