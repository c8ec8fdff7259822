#include "casimir/optical_table.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::materials {

OpticalDataTable::OpticalDataTable(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw ParameterError("optical table needs at least 2 rows, got " + std::to_string(rows_.size()));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (!std::isfinite(r.omega) || !std::isfinite(r.eps_imag) || r.omega <= 0.0) {
      throw ParameterError("optical table row " + std::to_string(i) + ": frequency must be positive and finite");
    }
    if (r.eps_imag < 0.0) {
      throw ParameterError("optical table row " + std::to_string(i) + ": Im eps must be >= 0");
    }
    if (i > 0 && !(r.omega > rows_[i - 1].omega)) {
      throw ParameterError("optical table row " + std::to_string(i) + ": frequencies must be strictly increasing");
    }
  }
}

OpticalDataTable parse_optical_table(std::istream& in) {
  std::vector<OpticalDataTable::Row> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double omega_ev = 0.0;
    double eps_imag = 0.0;
    if (!(fields >> omega_ev)) continue;  // blank or comment-only
    if (!(fields >> eps_imag)) {
      throw ParameterError("optical table line " + std::to_string(line_no) + ": expected two columns");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParameterError("optical table line " + std::to_string(line_no) + ": unexpected third column");
    }
    rows.push_back({ev_to_rad_s(omega_ev), eps_imag});
  }
  return OpticalDataTable(std::move(rows));
}

OpticalDataTable load_optical_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open optical table: " + path.string());
  return parse_optical_table(in);
}

namespace {

// (x - atan x) / x^3, the omega^-3 tail integral in units of the last Im eps.
double cubic_tail_factor(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return 1.0 / 3.0 - x2 / 5.0 + x2 * x2 / 7.0;
  }
  return (x - std::atan(x)) / (x * x * x);
}

double kk_integral(const OpticalDataTable& table, double xi) {
  const auto rows = table.rows();
  const double xi2 = xi * xi;
  auto integrand = [xi2](const OpticalDataTable::Row& r) {
    return r.omega * r.eps_imag / (r.omega * r.omega + xi2);
  };

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    sum += 0.5 * (rows[i + 1].omega - rows[i].omega) * (integrand(rows[i]) + integrand(rows[i + 1]));
  }

  const auto& first = rows.front();
  if (first.eps_imag > 0.0) {
    if (xi == 0.0) return std::numeric_limits<double>::infinity();
    sum += 0.5 * first.eps_imag * std::log1p(first.omega * first.omega / xi2);
  }

  const auto& last = rows.back();
  sum += last.eps_imag * cubic_tail_factor(xi / last.omega);
  return sum;
}

}  // namespace

double kk_to_imaginary_axis(const OpticalDataTable& table, double xi) {
  if (!(xi > 0.0)) throw DomainError("Kramers-Kronig transform needs xi > 0");
  return 1.0 + (2.0 / kPi) * kk_integral(table, xi);
}

double kk_static_limit(const OpticalDataTable& table) {
  return 1.0 + (2.0 / kPi) * kk_integral(table, 0.0);
}

}  // namespace casimir::materials
