// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned here.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only (repeatable)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/cli/commands.hpp"
#include "casimir/experiment.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/optical_table.hpp"
#include "oracles.hpp"

using namespace casimir;
using namespace casimir::lifshitz;
using materials::build_material;

namespace {

constexpr double kR = 100e-6;

struct Outcome {
  Outcome() = default;
  explicit Outcome(std::string s) : summary(std::move(s)) {}

  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  // Records one measured-vs-target comparison and folds it into `pass`.
  void compare(const std::string& what, double value, double target, double rel_tol, const char* unit,
               double unit_scale) {
    const double dev = std::abs(value / target - 1.0);
    const bool ok = dev <= rel_tol;
    pass = pass && ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s: %.6g %s vs %.6g %s (dev %.3g%%, tol %.3g%%)", ok ? "ok  " : "MISS",
                  what.c_str(), value / unit_scale, unit, target / unit_scale, unit, 100 * dev, 100 * rel_tol);
    details.emplace_back(buf);
  }

  void require(const std::string& what, bool ok, const std::string& info = {}) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "MISS ") + what + (info.empty() ? "" : ": " + info));
  }

  void runtime(double seconds, double limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.3f s (limit %.0f s)", seconds, limit);
    require(buf, seconds < limit);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome sensitivity_anchor() {
  Outcome o("sensitivity anchor, 0.96e-15 N within 1%");
  const auto t0 = std::chrono::steady_clock::now();
  const char* argv[] = {"casimir", "sensitivity", "--k", "0.03N/m", "--fr", "1130.9Hz",
                        "--Q", "5889.2", "--B", "0.3Hz", "--temperature", "77K"};
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(std::size(argv)), argv, out, err);
  o.require("sensitivity exits 0", code == cli::kExitOk, err.str());
  const std::string text = out.str();
  const auto pos = text.find("min_detectable_force,");
  double value = NAN;
  if (pos != std::string::npos) value = std::stod(text.substr(pos + 21));
  o.compare("F_min", value, 0.96e-15, 0.01, "fN", 1e-15);
  o.runtime(seconds_since(t0), 1.0);
  return o;
}

Outcome analytic_force_gap() {
  Outcome o("analytic force gap, 1.2 pN (2%) at 100 nm and 0.14 pN (3%) at 300 nm");
  const auto t0 = std::chrono::steady_clock::now();
  o.compare("|gap| at 100 nm", std::abs(zero_freq_gap_force(kR, 100e-9, 300.0, 11.66)), 1.2e-12, 0.02, "pN", 1e-12);
  o.compare("|gap| at 300 nm", std::abs(zero_freq_gap_force(kR, 300e-9, 300.0, 11.66)), 0.14e-12, 0.03, "pN",
            1e-12);
  o.runtime(seconds_since(t0), 1.0);
  return o;
}

Outcome analytic_pressure_gap() {
  Outcome o("analytic pressure gap, 38.6 mPa within 1% at 100 nm");
  const auto t0 = std::chrono::steady_clock::now();
  o.compare("|gap|", std::abs(zero_freq_gap_pressure(100e-9, 300.0, 11.66)), 38.6e-3, 0.01, "mPa", 1e-3);
  o.runtime(seconds_since(t0), 1.0);
  return o;
}

Outcome vo2_statics() {
  Outcome o("VO2 statics, eps0 = 9.909 (1e-12), gap 1.6 pN (5%) and 0.2 pN (15%) at 340 K");
  const double eps0 = build_material("vo2-insulator").static_permittivity();
  o.require("static permittivity 9.909 within 1e-12", std::abs(eps0 - 9.909) < 1e-12, sci(eps0 - 9.909));
  o.compare("|gap| at 100 nm, 340 K", std::abs(zero_freq_gap_force(kR, 100e-9, 340.0, eps0)), 1.6e-12, 0.05, "pN",
            1e-12);
  o.compare("|gap| at 300 nm, 340 K", std::abs(zero_freq_gap_force(kR, 300e-9, 340.0, eps0)), 0.2e-12, 0.15, "pN",
            1e-12);
  char buf[160];
  std::snprintf(buf, sizeof buf, "info 300 K for comparison: |gap| = %.4f pN at 100 nm, %.4f pN at 300 nm",
                std::abs(zero_freq_gap_force(kR, 100e-9, 300.0, eps0)) / 1e-12,
                std::abs(zero_freq_gap_force(kR, 300e-9, 300.0, eps0)) / 1e-12);
  o.details.emplace_back(buf);
  return o;
}

Outcome pressure_anchor() {
  Outcome o("difference pressure anchor, 250 mPa within 10% at 100 nm; 41-point sweep < 1 min");
  const auto t0 = std::chrono::steady_clock::now();
  cli::SweepConfig config;
  config.quantity = Quantity::pressure;
  const Curve curve = cli::run_sweep(config);
  const double elapsed = seconds_since(t0);
  o.require("41-point sweep converged", curve.metadata.converged && curve.values.size() == 41);
  o.compare("|dP| at 100 nm", std::abs(curve.values.front()), 250e-3, 0.10, "mPa", 1e-3);
  o.runtime(elapsed, 60.0);
  return o;
}

Outcome vo2_force_anchor() {
  Outcome o("VO2 difference force, 13 pN at 100 nm and 1.2 pN at 300 nm within 15% (340 K)");
  const auto au = build_material("gold-drude");
  const auto met = build_material("vo2-metal");
  const auto ins = build_material("vo2-insulator");
  const MatsubaraGrid grid{340.0};
  o.compare("|dF| at 100 nm", std::abs(difference_force(au, met, ins, kR, 100e-9, grid).value), 13e-12, 0.15, "pN",
            1e-12);
  o.compare("|dF| at 300 nm", std::abs(difference_force(au, met, ins, kR, 300e-9, grid).value), 1.2e-12, 0.15, "pN",
            1e-12);
  const MatsubaraGrid room{300.0};
  char buf[160];
  std::snprintf(buf, sizeof buf, "info 300 K for comparison: |dF| = %.4f pN at 100 nm, %.4f pN at 300 nm",
                std::abs(difference_force(au, met, ins, kR, 100e-9, room).value) / 1e-12,
                std::abs(difference_force(au, met, ins, kR, 300e-9, room).value) / 1e-12);
  o.details.emplace_back(buf);
  return o;
}

Outcome model_gap_identity() {
  Outcome o("model-gap identity over the default grid, force and pressure within 1e-4");
  const auto check = [&](const char* label, cli::SweepConfig config) {
    const auto report = cli::compare_models(config);
    o.require(std::string(label) + ": " + std::to_string(report.rows.size()) + " rows, max deviation " +
                  sci(report.max_relative_deviation),
              report.passing && report.converged && report.rows.size() == 41);
  };
  cli::SweepConfig si;
  check("Si force", si);
  si.quantity = Quantity::pressure;
  check("Si pressure", si);
  cli::SweepConfig vo2;
  vo2.temperature = 340.0;
  vo2.high = "vo2-metal";
  vo2.low = "vo2-insulator";
  check("VO2 force (340 K)", vo2);
  vo2.quantity = Quantity::pressure;
  check("VO2 pressure (340 K)", vo2);
  return o;
}

Outcome ideal_metal() {
  Outcome o("ideal-metal pressure at 1 K, 1 um: 1.30 mPa within 0.5%");
  const auto ideal = build_material("ideal-metal");
  const auto p = plate_plate_pressure({ideal, ideal, Geometry::plates()}, 1e-6, MatsubaraGrid{1.0});
  o.require("converged", p.truncation.converged, std::to_string(p.truncation.terms) + " terms");
  o.compare("|P| vs pi^2 hbar c / 240 z^4", std::abs(p.value), std::abs(oracle::ideal_casimir_pressure(1e-6)), 0.005,
            "mPa", 1e-3);
  o.compare("|P| vs 1.30 mPa", std::abs(p.value), 1.30e-3, 0.005, "mPa", 1e-3);
  return o;
}

Outcome property_suite() {
  Outcome o("property suite");
  const auto au = build_material("gold-drude");
  const auto au_plasma = au.with_zero_frequency_te(materials::ZeroFrequencyTE::plasma_limit);
  const auto n1 = build_material("si-doped-n1");
  const auto n2 = build_material("si-doped-n2");
  const auto si = build_material("si-dielectric");
  const MatsubaraGrid room{300.0};
  const auto rel = [](double a, double b) { return std::abs(a / b - 1.0); };

  double worst = 0.0;
  for (double z : {100e-9, 200e-9, 300e-9}) {
    const double one = difference_force(au, n1, si, kR, z, room).value;
    const double two = sphere_plate_force({au, n1, Geometry::sphere(kR)}, z, room).value -
                       sphere_plate_force({au, si, Geometry::sphere(kR)}, z, room).value;
    worst = std::max(worst, rel(one, two));
  }
  o.require("one-pass vs two-pass difference (1e-6)", worst < 1e-6, sci(worst));

  worst = 0.0;
  for (double z = 110e-9; z <= 290e-9 + 1e-12; z += 20e-9) {
    const double g = experiment::difference_force_gradient(au, n1, si, kR, z, room);
    worst = std::max(worst, rel(experiment::pressure_from_force_gradient(kR, g),
                                difference_pressure(au, n1, si, z, room).value));
  }
  o.require("PFA gradient vs difference pressure over [110, 290] nm (0.1%)", worst < 1e-3, sci(worst));

  bool identical = true;
  for (const auto& [h, l, T] : {std::tuple{"si-doped-n1", "si-dielectric", 300.0},
                                std::tuple{"si-doped-n2", "si-dielectric", 300.0},
                                std::tuple{"vo2-metal", "vo2-insulator", 340.0}}) {
    const auto high = build_material(h), low = build_material(l);
    const MatsubaraGrid grid{T};
    for (const auto& lo : {low, low.with_dc_conductivity()}) {
      for (double z : {100e-9, 300e-9}) {
        identical = identical &&
                    difference_force(au, high, lo, kR, z, grid).value ==
                        difference_force(au_plasma, high, lo, kR, z, grid).value &&
                    difference_pressure(au, high, lo, z, grid).value ==
                        difference_pressure(au_plasma, high, lo, z, grid).value;
      }
    }
  }
  o.require("gold zero-frequency TE rule leaves every difference unchanged (bitwise)", identical);

  bool invariants = true;
  const auto zs = log_grid(100e-9, 300e-9, 11);
  std::vector<double> prev_mag(zs.size(), INFINITY);
  for (const auto* plate : {&n1, &n2, &si}) {
    double prev = INFINITY;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const double f = sphere_plate_force({au, *plate, Geometry::sphere(kR)}, zs[i], room).value;
      invariants = invariants && f < 0.0 && std::abs(f) < prev && std::abs(f) < prev_mag[i];
      prev = std::abs(f);
      prev_mag[i] = std::abs(f);
    }
  }
  o.require("attraction, monotone decay and n1 > n2 > dielectric ordering", invariants);

  worst = 0.0;
  const QuadratureRule doubled(2 * QuadratureRule::kDefaultNodes);
  const MatsubaraGrid tighter{300.0, 0.5e-9};
  for (double z : {100e-9, 300e-9}) {
    const double f = difference_force(au, n1, si, kR, z, room).value;
    const double p = difference_pressure(au, n1, si, z, room).value;
    worst = std::max({worst, rel(difference_force(au, n1, si, kR, z, room, doubled).value, f),
                      rel(difference_force(au, n1, si, kR, z, tighter).value, f),
                      rel(difference_pressure(au, n1, si, z, room, doubled).value, p),
                      rel(difference_pressure(au, n1, si, z, tighter).value, p)});
  }
  o.require("node doubling and rel_tol halving (1e-5)", worst < 1e-5, sci(worst));

  worst = 0.0;
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const double x = oracle::uniform(rng, 0.0, 0.999);
    worst = std::max(worst, std::abs(polylog3(x) - oracle::li3(x)));
  }
  o.require("Li3 vs brute-force series (1e-10 absolute)", worst < 1e-10, sci(worst));

  const double w0 = 1e15, gamma = 0.2 * w0, s = 3.0;
  std::vector<materials::OpticalDataTable::Row> rows;
  for (int i = 0; i < 40000; ++i) {
    const double w = 1e11 * std::pow(1e8, i / 39999.0);
    rows.push_back({w, oracle::lorentz_imag(w, w0, gamma, s)});
  }
  const materials::OpticalDataTable table(rows);
  worst = 0.0;
  for (double xi = 1e13; xi <= 1e17; xi *= 1.5) {
    worst = std::max(worst, rel(materials::kk_to_imaginary_axis(table, xi),
                                oracle::lorentz_imaginary_axis(xi, w0, gamma, s)));
  }
  o.require("Kramers-Kronig round trip of a Lorentz oscillator (1%)", worst < 0.01, sci(worst));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "criterion number (1-9), repeatable")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      sensitivity_anchor, analytic_force_gap, analytic_pressure_gap, vo2_statics,   pressure_anchor,
      vo2_force_anchor,   model_gap_identity, ideal_metal,           property_suite,
  };
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }

  int failures = 0;
  for (int n : selected) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s [%d] %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", n, o.summary.c_str(), seconds_since(t0));
    for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
