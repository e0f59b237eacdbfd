#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "core/lineshape.hpp"
#include "core/pulse.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace gaugeline;

namespace {
const GaugeRepresentation kS = GaugeRepresentation::symmetric();
}

TEST_CASE("detuning identity") {
  testgen::Gen g(41);
  for (int i = 0; i < 1000; ++i) {
    const double w0 = g.log_uniform(0.1, 10.0), wl = g.log_uniform(0.1, 10.0), wk = g.log_uniform(0.1, 10.0);
    const DetuningSet d = make_detunings(w0, wl, wk, g.uniform(0.0, 2.0), g.uniform(0.0, 2.0));
    CHECK(std::abs(d.delta_k + d.delta_kl - d.delta_l) <= 4e-16 * (w0 + wl + wk));
    CHECK(d.mu >= std::abs(d.delta_l));
  }
}

TEST_CASE("Rabi solution on resonance") {
  PulseConfig c;
  c.rabi = 0.7;
  const double T = oracle::kPi / c.rabi;
  for (double t : make_grid(-T, 0.0, 50)) {
    const Complex be = excited_amplitude_during_pulse(t, c, kS, 1.0);
    const Complex bg = ground_amplitude_during_pulse(t, c, kS, 1.0);
    CHECK(std::abs(be - std::sin(c.rabi * (t + T) / 2.0)) <= 1e-14);
    CHECK(std::abs(bg - std::cos(c.rabi * (t + T) / 2.0)) <= 1e-14);
  }
  CHECK(std::abs(std::abs(excited_amplitude_during_pulse(0.0, c, kS, 1.0)) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(excited_amplitude_during_pulse(0.1, c, kS, 1.0), DomainError);
}

TEST_CASE("norm is conserved by the detuned solution") {
  testgen::Gen g(42);
  for (int i = 0; i < 100; ++i) {
    PulseConfig c;
    c.rabi = g.log_uniform(0.1, 3.0);
    c.omega_l = g.uniform(0.5, 1.5);
    for (const char* r : {"coulomb", "poincare", "symmetric"}) {
      const auto rep = GaugeRepresentation::parse(r);
      const double t = g.uniform(-oracle::kPi / c.rabi, 0.0);
      const double n = std::norm(excited_amplitude_during_pulse(t, c, rep, 1.0)) +
                       std::norm(ground_amplitude_during_pulse(t, c, rep, 1.0));
      CHECK(std::abs(n - 1.0) <= 1e-13);
    }
  }
}

TEST_CASE("resonant amplitude against direct time integration") {
  for (double gamma : {0.1, 0.01}) {
    for (double dk : {-3.0, -0.5, -0.1, 0.0, 0.2, 0.5, 0.5 + 1e-9, 2.0, 4.7}) {
      const Complex ref = oracle::resonant_beta(dk, 1.0, gamma);
      CHECK(oracle::rel(resonant_closed_form_amplitude(dk, 1.0, gamma), ref) <= 1e-10);
    }
  }
}

TEST_CASE("general closed form reduces to the resonant form") {
  PulseConfig c;
  double worst = 0.0;
  auto dks = make_grid(-0.99, 0.99, 1000);
  dks.push_back(0.5);
  dks.push_back(-0.5);
  for (double dk : dks) {
    const ModeAmplitude a = closed_form_amplitude(1.0 - dk, c, kS, 1.0, 0.1);
    worst = std::max(worst, oracle::rel(a.beta, resonant_closed_form_amplitude(dk, 1.0, 0.1)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("series branch is continuous across the removable singularity") {
  PulseConfig c;
  c.omega_l = 0.97;
  // Scan across a zero of (rabi u)^2 + 4 dk dkl and compare with neighbours.
  const auto grid = make_grid(0.2, 2.0, 4001);
  std::size_t flagged = 0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const ModeAmplitude a = closed_form_amplitude(grid[i], c, kS, 1.0, 0.1);
    if (!a.near_singular) continue;
    ++flagged;
    const Complex l = closed_form_amplitude(grid[i - 1], c, kS, 1.0, 0.1).beta;
    const Complex r = closed_form_amplitude(grid[i + 1], c, kS, 1.0, 0.1).beta;
    CHECK(std::abs(a.beta - 0.5 * (l + r)) <= 1e-3 * std::abs(a.beta));
  }
  CHECK(flagged > 0);
}

TEST_CASE("ODE agrees with the closed form") {
  PulseConfig c;
  c.rabi = 0.1;
  const auto modes = make_grid(0.5, 1.5, 41);
  const DynamicsResult r = integrate_dynamics(c, kS, 1.0, 0.01, modes);
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const ModeAmplitude a = closed_form_amplitude(modes[j], c, kS, 1.0, 0.01);
    CHECK(oracle::rel(r.mode_beta[j], a.beta) <= 1e-6);
  }
  CHECK(r.max_norm_error <= 1e-9);
}

TEST_CASE("fixed-step integration cross-check") {
  PulseConfig c;
  const auto modes = make_grid(0.5, 1.5, 5);
  DynamicsOptions o;
  o.fixed_step = 0.01;
  const DynamicsResult r = integrate_dynamics(c, kS, 1.0, 0.1, modes, o);
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const Complex cf = closed_form_amplitude(modes[j], c, kS, 1.0, 0.1).beta;
    CHECK(std::abs(r.mode_beta[j] - cf) <= 1e-9);
  }
}

TEST_CASE("counter-rotating laser terms are small") {
  PulseConfig c;
  DynamicsOptions o;
  o.rwa = false;
  const auto modes = make_grid(0.8, 1.2, 5);
  const DynamicsResult r = integrate_dynamics(c, GaugeRepresentation::coulomb(), 1.0, 0.1, modes, o);
  const DynamicsResult rwa = integrate_dynamics(c, GaugeRepresentation::coulomb(), 1.0, 0.1, modes);
  double worst = 0.0;
  for (std::size_t j = 0; j < modes.size(); ++j) worst = std::max(worst, oracle::rel(r.mode_beta[j], rwa.mode_beta[j]));
  CHECK(worst > 0.0);
  CHECK(worst < 0.5);
}

TEST_CASE("field coupled during the pulse keeps the norm bounded") {
  PulseConfig c;
  DynamicsOptions o;
  o.include_field_during_pulse = true;
  o.t_end = 60.0;
  const DynamicsResult r = integrate_dynamics(c, kS, 1.0, 0.1, make_grid(0.2, 1.8, 161), o);
  for (const auto& p : r.trajectory) CHECK(std::norm(p.b_g) + std::norm(p.b_e) <= 1.0 + 1e-8);
  CHECK_THROWS_AS(integrate_dynamics(c, kS, 1.0, 0.1, {1.0}, o), ConfigError);
}

TEST_CASE("pulse spectrum variants") {
  PulseConfig c;
  const auto grid = make_grid(0.05, 3.0, 300);
  LineshapeParams bare;
  bare.rep = kS;
  bare.gamma = 0.1;
  const Spectrum ref = lineshape_S(bare, grid);
  const Spectrum free = pulse_spectrum(c, kS, 1.0, 0.1, grid, PulseSpectrumVariant::LaserFree);
  CHECK(free.values() == ref.values());
  PulseConfig off = c;
  off.rabi = 0.0;
  CHECK(pulse_spectrum(off, kS, 1.0, 0.1, grid).values() == ref.values());

  const Spectrum lor = pulse_spectrum(c, kS, 1.0, 0.1, grid, PulseSpectrumVariant::Lorentzian);
  CHECK(lor.meta().representation == "lorentzian");
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(oracle::rel(lor.values()[i], oracle::lorentzian(grid[i] - 1.0, 0.1)) <= 1e-13);
  const Spectrum full = pulse_spectrum(c, kS, 1.0, 0.1, grid);
  for (double v : full.values()) CHECK(v >= 0.0);
}

TEST_CASE("resonant drive is representation independent") {
  PulseConfig c;
  for (const char* r : {"coulomb", "poincare", "symmetric", "alpha:0.3"})
    CHECK(std::abs(laser_coupling(c, GaugeRepresentation::parse(r), 1.0).u_minus - 1.0) <= 1e-15);
  c.alpha_laser = 1.5;
  CHECK_THROWS_AS(validate(c), DomainError);
}

TEST_CASE("detuning scan is zero at zero detuning") {
  PulseConfig c;
  const auto rows = detuning_sensitivity_scan(c, {kS, GaugeRepresentation::coulomb()}, {0.0, 0.05},
                                              1.0, 0.1, make_grid(0.2, 2.0, 50));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].max_relative_deviation == 0.0);
  CHECK(rows[1].max_relative_deviation > 0.0);
}
