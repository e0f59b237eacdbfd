#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "core/fluorescence.hpp"
#include "core/lineshape.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace gaugeline;

namespace {
const GaugeRepresentation kC = GaugeRepresentation::coulomb();
const GaugeRepresentation kP = GaugeRepresentation::poincare();
const GaugeRepresentation kS = GaugeRepresentation::symmetric();
}  // namespace

TEST_CASE("n factors match the closed forms") {
  testgen::Gen g(31);
  for (int i = 0; i < 500; ++i) {
    const double weg = g.log_uniform(0.1, 10.0), w0 = g.log_uniform(0.1, 10.0);
    CHECK(oracle::rel(n_factor(kC, w0, weg), oracle::n_coulomb(w0, weg)) <= 1e-13);
    CHECK(oracle::rel(n_factor(kP, w0, weg), oracle::n_poincare(w0, weg)) <= 1e-13);
    CHECK(oracle::rel(n_factor(kS, w0, weg), oracle::n_symmetric(w0, weg)) <= 1e-13);
    for (const auto& rep : {kC, kP, kS})
      CHECK(oracle::rel(n_factor_from_first_principles(rep, w0, weg), n_factor(rep, w0, weg)) <= 1e-12);
  }
  CHECK(n_factor(kS, 3.0, 1.0) == doctest::Approx(27.0 / 16.0).epsilon(1e-15));
  CHECK(n_factor(kC, 2.0, 1.0) == 0.5);
  CHECK_THROWS_AS(n_factor(kC, 0.0, 1.0), DomainError);
}

TEST_CASE("Lamb-line factors match the closed forms") {
  testgen::Gen g(32);
  for (int i = 0; i < 500; ++i) {
    const double w = g.log_uniform(0.1, 10.0), wp = w * g.log_uniform(2.0, 2e3);
    const double w0 = g.uniform(0.01, w + wp * 0.99);
    CHECK(oracle::rel(lamb_n_factor(kC, w0, w, wp), oracle::lamb_coulomb(w0, w, wp)) <= 1e-12);
    CHECK(oracle::rel(lamb_n_factor(kP, w0, w, wp), oracle::lamb_poincare(w0, w, wp)) <= 1e-12);
    CHECK(oracle::rel(lamb_n_factor(kS, w0, w, wp), oracle::lamb_symmetric(w0, w, wp)) <= 1e-12);
    for (const auto& rep : {kC, kP, kS})
      CHECK(oracle::rel(lamb_n_factor_from_first_principles(rep, w0, w, wp), lamb_n_factor(rep, w0, w, wp)) <=
            1e-11);
  }
  CHECK(lamb_n_factor(kC, 2.0, 1.0, 10.0) == doctest::Approx(0.225).epsilon(1e-15));
  CHECK(lamb_n_factor(kP, 10.999, 1.0, 10.0) >= 0.0);
  CHECK_THROWS_AS(lamb_n_factor(kP, 11.0, 1.0, 10.0), DomainError);
  for (const char* r : {"coulomb", "poincare", "symmetric", "alpha:0.3"})
    CHECK(std::abs(lamb_n_factor(GaugeRepresentation::parse(r), 1.0, 1.0, 1e3) - 1.0) <= 1e-12);
}

TEST_CASE("fluorescence rate") {
  SharpLineScenario s;
  s.intensity = 2.0;
  s.gamma = 0.2;
  s.dipole_proj = 0.5;
  CHECK(oracle::rel(fluorescence_rate(s), 2.0 * 0.25 * 2.0 / 0.2) <= 1e-14);
  s.omega_0 = 2.0;
  s.rep = kP;
  const double p = fluorescence_rate(s);
  s.rep = kC;
  CHECK(p / fluorescence_rate(s) == doctest::Approx(16.0).epsilon(1e-13));
  s.intensity = 0.0;
  CHECK(fluorescence_rate(s) == 0.0);
}

TEST_CASE("numerators skew the resonance in opposite directions") {
  SharpLineScenario s;
  s.gamma = 0.1;
  for (double d : {0.01, 0.05, 0.2, 0.5}) {
    auto rate = [&](const GaugeRepresentation& rep, double w0) {
      s.rep = rep;
      s.omega_0 = w0;
      return fluorescence_rate(s);
    };
    CHECK(rate(kC, 1.0 - d) > rate(kC, 1.0 + d));
    CHECK(rate(kP, 1.0 + d) > rate(kP, 1.0 - d));
  }
}

TEST_CASE("damped rate reduces to the sharp-line rate") {
  testgen::Gen g(33);
  for (int i = 0; i < 50; ++i) {
    const double w = g.log_uniform(0.3, 3.0), d = g.log_uniform(0.05, 1.0);
    const AtomModel a = build_two_level(w, d);
    const double w0 = w * g.uniform(0.5, 1.5), S = g.uniform(0.1, 3.0);
    for (const auto& rep : {kC, kP, kS}) {
      SharpLineScenario s;
      s.intensity = S;
      s.omega_0 = w0;
      s.omega_eg = w;
      s.gamma = gamma_onshell(a, "e", "g");
      s.dipole_proj = d;
      s.rep = rep;
      const double general = damped_rate_general(a, "g", rep, {{w0, S}}, {0.0, 0.0, 1.0});
      CHECK(oracle::rel(general, fluorescence_rate(s)) <= 1e-12);
      const double two =
          damped_rate_general(a, "g", rep, {{w0, S}, {1.3 * w0, 2.0 * S}}, {0.0, 0.0, 1.0});
      const double second = damped_rate_general(a, "g", rep, {{1.3 * w0, 2.0 * S}}, {0.0, 0.0, 1.0});
      CHECK(oracle::rel(two, general + second) <= 1e-14);
    }
  }
  const AtomModel free = build_two_level(1.0, 0.0);
  CHECK(damped_rate_general(free, "g", kC, {{1.0, 1.0}}, {0, 0, 1}) == 0.0);
  CHECK_THROWS_AS(damped_rate_general(free, "g", kC, std::vector<IncidentLine>{}, {0, 0, 1}), ConfigError);
}

TEST_CASE("sweeps carry the factor column") {
  LambLineScenario l = lamb_line_preset("lamb-hydrogen");
  CHECK(l.omega_prime / l.omega == 1e3);
  CHECK(l.gamma_2p1s / l.omega == 0.6);
  CHECK_THROWS_AS(lamb_line_preset("hydrogen"), ConfigError);
  const auto grid = make_grid(0.5, 1.5, 11);
  const Spectrum s = lamb_rate_sweep(l, grid);
  REQUIRE(s.extra_column().has_value());
  CHECK(s.extra_column()->first == "n_factor");
  CHECK(s.values()[5] == doctest::Approx(l.intensity * l.dipole_proj * l.dipole_proj * 2.0 / l.gamma_2p1s));
  l.intensity = 0.0;
  const Spectrum dark = lamb_rate_sweep(l, grid);
  for (double v : dark.values()) CHECK(v == 0.0);
}

TEST_CASE("Poincare Lamb line stays close to the bare Lorentzian") {
  LambLineScenario l = lamb_line_preset("lamb-hydrogen");
  l.rep = kP;
  for (double wp : {1e2, 1e3, 1e4}) {
    const double x = l.gamma_2p1s / wp;
    double worst = 0.0;
    for (double w0 : make_grid(l.omega - 5 * l.gamma_2p1s, l.omega + 5 * l.gamma_2p1s, 201))
      if (w0 > 0) worst = std::max(worst, std::abs(lamb_n_factor(kP, w0, l.omega, wp) - 1.0));
    CHECK(worst <= 15 * x + 75 * x * x + 125 * x * x * x);
  }
}
