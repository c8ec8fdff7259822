#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/materials.hpp"
#include "oracles.hpp"

using namespace casimir;
using namespace casimir::materials;

namespace {

std::vector<std::string> buildable_catalog() {
  return {"gold-drude", "si-dielectric", "si-doped-n1", "si-doped-n2", "si-doped-low", "vo2-insulator", "vo2-metal"};
}

}  // namespace

TEST_CASE("constants") {
  CHECK(kConstants.eV_to_rad_s == doctest::Approx(kConstants.e / kConstants.hbar).epsilon(1e-12));
  CHECK(kConstants.kB > 0);
  CHECK(kConstants.hbar > 0);
  CHECK(kConstants.c > 0);
  CHECK(kConstants.eps0 > 0);
  CHECK(kConstants.me > 0);
}

TEST_CASE("vo2 insulator static permittivity") {
  const auto m = build_material("vo2-insulator");
  double sum = 4.26;
  for (const auto& r : vo2_insulator_table()) sum += r.strength;
  CHECK(std::abs(m.static_permittivity() - 9.909) < 1e-12);
  CHECK(m.static_permittivity() == sum);
  CHECK(m.eval(0.0) == doctest::Approx(m.static_permittivity()).epsilon(1e-15));
  CHECK_FALSE(m.conducts_at_zero_frequency());
}

TEST_CASE("vo2 catalog parameters") {
  const auto ins = build_material("vo2-insulator");
  const auto& osc = std::get<OscillatorBackground>(*ins.background());
  REQUIRE(osc.oscillators.size() == 7);
  CHECK(osc.oscillators[0].strength == 0.79);
  CHECK(osc.oscillators[0].omega == doctest::Approx(ev_to_rad_s(1.02)).epsilon(1e-15));
  CHECK(osc.tail.eps_inf == 4.26);
  CHECK(osc.tail.omega_inf == doctest::Approx(ev_to_rad_s(15.0)).epsilon(1e-15));
  CHECK_FALSE(ins.drude());

  const auto met = build_material("vo2-metal");
  const auto& mo = std::get<OscillatorBackground>(*met.background());
  REQUIRE(mo.oscillators.size() == 4);
  CHECK(mo.oscillators[0].strength == 1.816);
  CHECK(mo.oscillators[0].omega == doctest::Approx(ev_to_rad_s(0.86)).epsilon(1e-15));
  CHECK(mo.tail.eps_inf == 3.95);
  REQUIRE(met.drude());
  CHECK(met.drude()->omega_p == doctest::Approx(ev_to_rad_s(3.33)).epsilon(1e-15));
  CHECK(met.drude()->gamma == doctest::Approx(ev_to_rad_s(0.66)).epsilon(1e-15));
  CHECK(std::isinf(met.static_permittivity()));
}

TEST_CASE("eV round trip of the oscillator tables") {
  for (const auto& table : {vo2_insulator_table(), vo2_metal_table()}) {
    for (const auto& r : table) {
      CHECK(std::abs(rad_s_to_ev(ev_to_rad_s(r.omega_ev)) / r.omega_ev - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("silicon catalog") {
  CHECK(build_material("si-dielectric").static_permittivity() == doctest::Approx(11.66).epsilon(1e-15));
  for (const char* name : {"si-doped-n1", "si-doped-n2", "si-doped-low"}) {
    CHECK(std::isinf(build_material(name).static_permittivity()));
    CHECK(build_material(name).conducts_at_zero_frequency());
  }
  CHECK(build_material("si-doped-n1").drude()->omega_p == 2.0e15);
  CHECK(build_material("si-doped-n1").drude()->gamma == 2.4e14);
  CHECK(build_material("si-doped-n2").drude()->omega_p == 6.3e14);
  CHECK(build_material("si-doped-n2").drude()->gamma == 1.8e13);
  CHECK(build_material("si-doped-low").drude()->omega_p == 3.5e13);
  CHECK(build_material("si-doped-low").drude()->gamma == 1.8e13);
}

TEST_CASE("low-doped silicon at the first Matsubara frequency") {
  // Hand evaluation of core + Drude at xi_1(300 K).
  const double xi = 2.0 * oracle::pi * oracle::kB * 300.0 / oracle::hbar;
  const double core = 1.0 + 10.66 / (1.0 + (xi / 6.6e15) * (xi / 6.6e15));
  const double drude = 3.5e13 * 3.5e13 / (xi * (xi + 1.8e13));
  const double value = build_material("si-doped-low").eval(xi);
  CHECK(value == doctest::Approx(core + drude).epsilon(1e-14));
  CHECK(value == doctest::Approx(11.6639).epsilon(1e-5));
}

TEST_CASE("generic doped silicon needs parameters") {
  CHECK_THROWS_AS(build_material("si-doped"), ParameterError);
  MaterialSpec spec;
  spec.name = "si-doped";
  spec.drude = DrudeParams{1e15, 1e13};
  CHECK(build_material(spec).drude()->omega_p == 1e15);
}

TEST_CASE("build_material errors") {
  CHECK_THROWS_AS(build_material("unobtainium"), ParameterError);
  MaterialSpec bad;
  bad.name = "si-doped";
  bad.drude = DrudeParams{-1.0, 1e13};
  CHECK_THROWS_AS(build_material(bad), ParameterError);
  bad.drude = DrudeParams{1e15, -1.0};
  CHECK_THROWS_AS(build_material(bad), ParameterError);
  CHECK_THROWS_AS(build_material("tabulated"), ParameterError);
  CHECK_THROWS_AS(PermittivityModel("neg", Background{OscillatorBackground{{{1e15, 0.1, -0.5}}, {2.0, 1e16}}},
                                    std::nullopt),
                  ParameterError);
}

TEST_CASE("eval domain") {
  const auto si = build_material("si-doped-n1");
  CHECK_THROWS_AS(si.eval(0.0), DomainError);
  CHECK_THROWS_AS(si.eval(-1.0), DomainError);
  CHECK_THROWS_AS(build_material("si-dielectric").eval(-1.0), DomainError);
  CHECK(std::isinf(build_material("ideal-metal").eval(1e15)));
}

TEST_CASE("every catalog model tends to one at high frequency") {
  for (const auto& name : buildable_catalog()) {
    CAPTURE(name);
    CHECK(std::abs(build_material(name).eval(1e25) - 1.0) < 1e-6);
  }
}

TEST_CASE("property: catalog models are >= 1 and non-increasing on the imaginary axis") {
  std::mt19937 rng(20240611);
  for (const auto& name : buildable_catalog()) {
    const auto m = build_material(name);
    for (int i = 0; i < 2000; ++i) {
      double a = oracle::log_uniform(rng, 1e10, 1e20);
      double b = oracle::log_uniform(rng, 1e10, 1e20);
      if (a > b) std::swap(a, b);
      const double ea = m.eval(a), eb = m.eval(b);
      CAPTURE(name);
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(std::isfinite(ea));
      REQUIRE(eb >= 1.0);
      REQUIRE(eb <= ea);
    }
  }
}

TEST_CASE("property: zero strengths leave only the high-frequency tail") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    OscillatorBackground bg;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      bg.oscillators.push_back({oracle::log_uniform(rng, 1e13, 1e17), oracle::uniform(rng, 0.0, 2.0), 0.0});
    }
    bg.tail = {oracle::uniform(rng, 1.0, 10.0), oracle::log_uniform(rng, 1e15, 1e17)};
    const PermittivityModel m("tail-only", Background{bg}, std::nullopt);
    for (int i = 0; i < 20; ++i) {
      const double xi = oracle::log_uniform(rng, 1e10, 1e19);
      const double v = xi / bg.tail.omega_inf;
      CHECK(m.eval(xi) == doctest::Approx(1.0 + (bg.tail.eps_inf - 1.0) / (1.0 + v * v)).epsilon(1e-14));
    }
  }
}

TEST_CASE("dc conductivity flag only changes the static limit") {
  const auto si = build_material("si-dielectric");
  const auto dc = si.with_dc_conductivity();
  CHECK(std::isinf(dc.static_permittivity()));
  CHECK(dc.conducts_at_zero_frequency());
  CHECK(dc.label() == "si-dielectric+dc");
  for (double xi : {1e12, 2.468e14, 1e16}) CHECK(dc.eval(xi) == si.eval(xi));
}

TEST_CASE("plasma frequency") {
  const CarrierParams n1{3.2e26, kSiliconEffectiveMassRatio * kConstants.me, std::nullopt};
  const double wp = plasma_frequency(n1);
  CHECK(wp == doctest::Approx(1.98e15).epsilon(0.01));
  CHECK(std::abs(wp / 2.0e15 - 1.0) < 0.02);

  const CarrierParams n4{4 * 3.2e26, n1.effective_mass, std::nullopt};
  CHECK(plasma_frequency(n4) == doctest::Approx(2.0 * wp).epsilon(1e-14));

  // Closed form evaluated by hand for n = 1e23 m^-3.
  const double expected = std::sqrt(1e23 * 1.602176634e-19 * 1.602176634e-19 /
                                    (8.8541878128e-12 * 0.26 * 9.1093837015e-31));
  CHECK(plasma_frequency({1e23, 0.26 * kConstants.me, std::nullopt}) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(3.49869e13).epsilon(1e-5));

  CHECK_THROWS_AS(plasma_frequency({0.0, 1.0, std::nullopt}), ParameterError);
  CHECK_THROWS_AS(plasma_frequency({1.0, -1.0, std::nullopt}), ParameterError);
}

TEST_CASE("scattering time") {
  const double wp = 2.0e15;
  CHECK(scattering_time(2e5, wp) == doctest::Approx(2 * scattering_time(1e5, wp)).epsilon(1e-15));
  CHECK(scattering_time(kConstants.eps0 * wp * wp * 1e-14, wp) == doctest::Approx(1e-14).epsilon(1e-14));
  CHECK(scattering_time(1e5, wp) == doctest::Approx(1e5 / (8.8541878128e-12 * 4e30)).epsilon(1e-14));
  CHECK(scattering_time(1e5, wp) == doctest::Approx(2.8235e-15).epsilon(1e-4));
  CHECK_THROWS_AS(scattering_time(0.0, wp), ParameterError);
  CHECK_THROWS_AS(scattering_time(1.0, 0.0), ParameterError);
}

TEST_CASE("optical table validation and parsing") {
  CHECK_THROWS_AS(OpticalDataTable({{1.0, 0.0}}), ParameterError);
  CHECK_THROWS_AS(OpticalDataTable({{1.0, 0.0}, {1.0, 0.0}}), ParameterError);
  CHECK_THROWS_AS(OpticalDataTable({{1.0, 0.0}, {2.0, -0.1}}), ParameterError);
  CHECK_THROWS_AS(OpticalDataTable({{-1.0, 0.0}, {2.0, 0.1}}), ParameterError);

  std::istringstream text("# omega_eV im_eps\n0.5 0.0\n1.0  2.0 # peak\n\n2.0\t0.5\n");
  const auto t = parse_optical_table(text);
  REQUIRE(t.size() == 3);
  CHECK(t.rows()[1].omega == doctest::Approx(ev_to_rad_s(1.0)).epsilon(1e-15));
  CHECK(t.rows()[1].eps_imag == 2.0);

  std::istringstream bad("1.0\n");
  CHECK_THROWS_AS(parse_optical_table(bad), ParameterError);
  std::istringstream extra("1.0 2.0 3.0\n2.0 1.0\n");
  CHECK_THROWS_AS(parse_optical_table(extra), ParameterError);
  CHECK_THROWS_AS(load_optical_table("/nonexistent/table.txt"), ParameterError);
}

TEST_CASE("Kramers-Kronig: empty spectrum") {
  const OpticalDataTable t({{1e13, 0.0}, {1e15, 0.0}, {1e17, 0.0}});
  CHECK(kk_to_imaginary_axis(t, 1e14) == 1.0);
  CHECK(kk_static_limit(t) == 1.0);
  CHECK_THROWS_AS(kk_to_imaginary_axis(t, 0.0), DomainError);
}

TEST_CASE("Kramers-Kronig: dense Lorentz oscillator matches the closed form") {
  const double w0 = 1e15, g = 0.2 * w0, s = 3.0;
  std::vector<OpticalDataTable::Row> rows;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const double w = 1e11 * std::pow(1e8, static_cast<double>(i) / (n - 1));
    rows.push_back({w, oracle::lorentz_imag(w, w0, g, s)});
  }
  const OpticalDataTable t(rows);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const double xi = oracle::log_uniform(rng, 1e13, 1e17);
    const double expected = oracle::lorentz_imaginary_axis(xi, w0, g, s);
    CAPTURE(xi);
    CHECK(std::abs(kk_to_imaginary_axis(t, xi) / expected - 1.0) < 0.01);
  }
}

TEST_CASE("Kramers-Kronig: monotone approach to one above the table") {
  const OpticalDataTable t({{1e14, 0.5}, {1e15, 2.0}, {2e15, 1.0}});
  double prev = kk_to_imaginary_axis(t, 1e16);
  for (double xi = 2e16; xi < 1e22; xi *= 3) {
    const double v = kk_to_imaginary_axis(t, xi);
    CHECK(v <= prev);
    CHECK(v >= 1.0);
    prev = v;
  }
  CHECK(prev - 1.0 < 1e-9);
  CHECK(std::isinf(kk_static_limit(t)));
}

TEST_CASE("tabulated catalog entry") {
  auto table = std::make_shared<const OpticalDataTable>(
      std::vector<OpticalDataTable::Row>{{1e13, 0.0}, {1e15, 2.0}, {1e16, 0.1}});
  MaterialSpec spec;
  spec.name = "tabulated";
  spec.table = table;
  const auto m = build_material(spec);
  CHECK(m.eval(1e15) == kk_to_imaginary_axis(*table, 1e15));
  CHECK(std::isfinite(m.static_permittivity()));
  CHECK(m.static_permittivity() >= m.eval(1e12));
}
