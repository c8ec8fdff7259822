#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::lifshitz {

enum class Quantity { force, pressure };

struct CurveMetadata {
  Quantity quantity = Quantity::force;
  std::vector<std::string> materials;  // probe, high[, low]
  double temperature = 0.0;
  double radius = 0.0;  // m; force curves only
  int max_terms = 0;
  double worst_truncation = 0.0;
  bool converged = true;
};

/// Values on a separation grid: N for force curves, Pa for pressure curves.
/// Attractive values are negative.
struct Curve {
  std::vector<double> separations;
  std::vector<double> values;
  std::vector<TruncationReport> diagnostics;
  CurveMetadata metadata;
};
using ForceCurve = Curve;
using PressureCurve = Curve;

/// n points from z_min to z_max inclusive. Throws ParameterError unless
/// 0 < z_min < z_max and n >= 2.
std::vector<double> linear_grid(double z_min, double z_max, std::size_t n);
std::vector<double> log_grid(double z_min, double z_max, std::size_t n);

/// Evaluates f(i) for i in [0, n) on up to `workers` threads (0 = hardware
/// concurrency). Each index is written to its own slot, so the output does
/// not depend on the worker count.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& f);

struct SweepRequest {
  Quantity quantity = Quantity::force;
  PermittivityModel probe;
  PermittivityModel high;
  std::optional<PermittivityModel> low;  // absent: single-pair curve of `high`
  double radius = 0.0;
  MatsubaraGrid grid;
  std::vector<double> separations;
  unsigned workers = 0;
};

/// Difference (or single-pair) force/pressure over the separation grid.
Curve sweep(const SweepRequest& request, const QuadratureRule& rule = QuadratureRule::standard());

}  // namespace casimir::lifshitz
