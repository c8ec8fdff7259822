#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace casimir::materials {

/// Imaginary part of the permittivity sampled along the real frequency axis.
///
/// Rows are strictly increasing in frequency (rad/s) with eps_imag >= 0;
/// at least two rows. Construction validates and throws ParameterError.
class OpticalDataTable {
 public:
  struct Row {
    double omega;     // rad/s
    double eps_imag;  // Im eps(omega)
  };

  explicit OpticalDataTable(std::vector<Row> rows);

  std::span<const Row> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Row> rows_;
};

/// Reads the two-column text format: `omega_eV  im_eps`, whitespace separated,
/// '#' starts a comment. Frequencies are converted to rad/s.
OpticalDataTable parse_optical_table(std::istream& in);
OpticalDataTable load_optical_table(const std::filesystem::path& path);

/// eps(i xi) = 1 + (2/pi) * integral_0^inf omega Im eps(omega) / (omega^2 + xi^2) d omega.
///
/// Trapezoidal rule on the tabulated grid. Below the first row Im eps is held
/// constant; above the last row it falls off as omega^-3 (the Lorentz-oscillator
/// tail). Both extrapolated pieces are integrated in closed form.
/// Throws DomainError for xi <= 0.
double kk_to_imaginary_axis(const OpticalDataTable& table, double xi);

/// Limit xi -> 0 of kk_to_imaginary_axis: finite only when the first row has
/// Im eps = 0 (otherwise the constant low-frequency extrapolation diverges
/// logarithmically and +infinity is returned).
double kk_static_limit(const OpticalDataTable& table);

}  // namespace casimir::materials
