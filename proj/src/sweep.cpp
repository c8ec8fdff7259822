#include "casimir/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "casimir/error.hpp"

namespace casimir::lifshitz {

namespace {

void check_grid(double z_min, double z_max, std::size_t n) {
  if (!(z_min > 0.0) || !(z_max > z_min)) throw ParameterError("need 0 < z_min < z_max");
  if (n < 2) throw ParameterError("need at least 2 grid points");
}

}  // namespace

std::vector<double> linear_grid(double z_min, double z_max, std::size_t n) {
  check_grid(z_min, z_max, n);
  std::vector<double> z(n);
  const double step = (z_max - z_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) z[i] = z_min + step * static_cast<double>(i);
  z.back() = z_max;
  return z;
}

std::vector<double> log_grid(double z_min, double z_max, std::size_t n) {
  check_grid(z_min, z_max, n);
  std::vector<double> z(n);
  const double ratio = std::log(z_max / z_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) z[i] = z_min * std::exp(ratio * static_cast<double>(i));
  z.front() = z_min;
  z.back() = z_max;
  return z;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& f) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            f(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

Curve sweep(const SweepRequest& request, const QuadratureRule& rule) {
  const auto& z = request.separations;
  if (z.size() < 2) throw ParameterError("sweep needs at least 2 separations");
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (!(z[i] > z[i - 1])) throw ParameterError("separations must be strictly increasing");
  }

  Curve curve;
  curve.separations = z;
  curve.values.resize(z.size());
  curve.diagnostics.resize(z.size());

  parallel_for(z.size(), request.workers, [&](std::size_t i) {
    LifshitzResult r;
    if (request.quantity == Quantity::force) {
      if (request.low) {
        r = difference_force(request.probe, request.high, *request.low, request.radius, z[i], request.grid, rule);
      } else {
        r = sphere_plate_force({request.probe, request.high, Geometry::sphere(request.radius)}, z[i],
                               request.grid, rule);
      }
    } else {
      if (request.low) {
        r = difference_pressure(request.probe, request.high, *request.low, z[i], request.grid, rule);
      } else {
        r = plate_plate_pressure({request.probe, request.high, Geometry::plates()}, z[i], request.grid, rule);
      }
    }
    curve.values[i] = r.value;
    curve.diagnostics[i] = r.truncation;
  });

  auto& meta = curve.metadata;
  meta.quantity = request.quantity;
  meta.materials = {request.probe.label(), request.high.label()};
  if (request.low) meta.materials.push_back(request.low->label());
  meta.temperature = request.grid.temperature;
  meta.radius = request.quantity == Quantity::force ? request.radius : 0.0;
  for (const auto& d : curve.diagnostics) {
    meta.max_terms = std::max(meta.max_terms, d.terms);
    meta.worst_truncation = std::max(meta.worst_truncation, d.last_term_ratio);
    meta.converged = meta.converged && d.converged;
  }
  return curve;
}

}  // namespace casimir::lifshitz
