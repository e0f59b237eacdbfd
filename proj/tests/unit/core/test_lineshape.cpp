#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "core/lineshape.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace gaugeline;

namespace {

const GaugeRepresentation kC = GaugeRepresentation::coulomb();
const GaugeRepresentation kP = GaugeRepresentation::poincare();
const GaugeRepresentation kS = GaugeRepresentation::symmetric();

}  // namespace

TEST_CASE("numerators match the closed forms") {
  testgen::Gen g(7);
  for (int i = 0; i < 1000; ++i) {
    const double weg = g.log_uniform(0.1, 10.0), x = g.log_uniform(0.01, 20.0), wk = x * weg;
    CHECK(oracle::rel(numerator(kC, wk, weg), oracle::num_coulomb(x)) <= 1e-13);
    CHECK(oracle::rel(numerator(kP, wk, weg), oracle::num_poincare(x)) <= 1e-13);
    CHECK(oracle::rel(numerator(kS, wk, weg), oracle::num_symmetric(x)) <= 1e-13);
    for (const auto& rep : {kC, kP, kS})
      CHECK(oracle::rel(numerator_from_first_principles(rep, wk, weg), numerator(rep, wk, weg)) <= 1e-12);
    const double a = g.uniform(0.0, 1.0);
    const double u = oracle::u_minus(a, wk, weg);
    CHECK(oracle::rel(numerator(GaugeRepresentation::custom(a), wk, weg), x * x * u * u) <= 1e-12);
  }
}

TEST_CASE("numerators are 1 on shell") {
  for (const char* r : {"coulomb", "poincare", "symmetric", "alpha:0.3"})
    CHECK(std::abs(numerator(GaugeRepresentation::parse(r), 1.7, 1.7) - 1.0) <= 1e-15);
}

TEST_CASE("alpha endpoints equal the named gauges bitwise") {
  testgen::Gen g(8);
  for (int i = 0; i < 200; ++i) {
    const double wk = g.log_uniform(0.01, 10.0);
    CHECK(numerator(GaugeRepresentation::custom(0.0), wk, 1.0) == numerator(kC, wk, 1.0));
    CHECK(numerator(GaugeRepresentation::custom(1.0), wk, 1.0) == numerator(kP, wk, 1.0));
  }
}

TEST_CASE("symmetric numerator lies between Coulomb and Poincare off resonance") {
  testgen::Gen g(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = g.log_uniform(0.01, 100.0);
    if (std::abs(x - 1.0) < 1e-6) continue;
    const double c = numerator(kC, x, 1.0), p = numerator(kP, x, 1.0), s = numerator(kS, x, 1.0);
    CHECK(s > std::min(c, p));
    CHECK(s < std::max(c, p));
  }
}

TEST_CASE("on-shell rate is representation independent") {
  testgen::Gen g(10);
  for (int i = 0; i < 100; ++i) {
    const double w = g.log_uniform(0.1, 10.0), d = g.log_uniform(0.01, 3.0);
    const AtomModel a = build_two_level(w, d);
    const double ref = oracle::golden_rule(w, d * d);
    CHECK(oracle::rel(gamma_onshell(a, "e", "g"), ref) <= 1e-14);
    for (const char* r : {"coulomb", "poincare", "symmetric", "alpha:0.3", "alpha:0.9"})
      CHECK(oracle::rel(gamma_onshell_via(a, "e", "g", GaugeRepresentation::parse(r)), ref) <= 1e-12);
  }
  const AtomModel osc = build_oscillator(1.0, 1.0, 6);
  const double ref = gamma_onshell(osc, "3", "2");
  for (const auto& rep : {kC, kP, kS}) CHECK(oracle::rel(gamma_onshell_via(osc, "3", "2", rep), ref) <= 1e-12);
  CHECK(gamma_onshell(build_two_level(1.0, 0.0), "e", "g") == 0.0);
  CHECK_THROWS_AS(gamma_onshell(osc, "1", "2"), DomainError);
}

TEST_CASE("off-shell rate reduces to the on-shell rate at the level energy") {
  const AtomModel a = build_two_level(1.0, 0.8);
  for (const auto& rep : {kC, kP, kS}) {
    CHECK(oracle::rel(gamma_offshell(1.0, a, "e", rep), gamma_onshell(a, "e", "g")) <= 1e-13);
    CHECK(oracle::rel(gamma_offshell(2.0, a, "e", rep),
                      gamma_onshell(a, "e", "g") * numerator(rep, 2.0, 1.0)) <= 1e-12);
    CHECK(gamma_offshell(-0.5, a, "e", rep) == 0.0);
  }
}

TEST_CASE("lineshape value and ratios") {
  LineshapeParams p;
  p.gamma = 0.1;
  for (const auto& rep : {kC, kP, kS}) {
    p.rep = rep;
    CHECK(oracle::rel(lineshape_value(p, 1.0), 2.0 / (oracle::kPi * 0.1)) <= 1e-14);
  }
  p.rep = kP;
  const double sp = lineshape_value(p, 2.0);
  p.rep = kC;
  CHECK(std::abs(sp / lineshape_value(p, 2.0) - 4.0) <= 1e-12);

  testgen::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    p.rep = kS;
    p.gamma = g.log_uniform(1e-3, 0.5);
    p.lamb_shift = g.uniform(-0.1, 0.1);
    const double wk = g.log_uniform(0.05, 5.0);
    const double expect = oracle::num_symmetric(wk) * oracle::lorentzian(wk - 1.0 - p.lamb_shift, p.gamma);
    CHECK(oracle::rel(lineshape_value(p, wk), expect) <= 1e-13);
    CHECK(lineshape_value(p, wk) >= 0.0);
  }
  p.gamma = -1.0;
  CHECK_THROWS_AS(validate(p), DomainError);
}

TEST_CASE("lineshape spectrum echoes its parameters") {
  LineshapeParams p;
  p.rep = kS;
  p.cutoff = 500.0;
  const Spectrum s = lineshape_S(p, make_grid(0.1, 3.0, 50));
  CHECK(s.meta().representation == "symmetric");
  CHECK(s.meta().cutoff == 500.0);
  CHECK(s.meta().note.find("cutoff") != std::string::npos);
  p.offshell_gamma = true;
  const Spectrum e = lineshape_S(p, make_grid(0.1, 3.0, 50));
  CHECK(e.meta().params.at(0).second == "experimental");
}

TEST_CASE("Lamb shift matches the logarithmic closed form") {
  testgen::Gen g(13);
  for (int i = 0; i < 10; ++i) {
    const double w = g.log_uniform(0.2, 5.0), d = g.log_uniform(0.1, 2.0), c = g.log_uniform(50.0, 5e3);
    const AtomModel a = build_two_level(w, d);
    // e: single channel to g with w_ns = -w; g: channel to e with w_ns = +w.
    const double pref = d * d * w * w / (6.0 * oracle::kPi * oracle::kPi);
    const double le = pref * (-w) * std::log(std::abs((-w + c) / -w));
    const double lg = pref * w * std::log((w + c) / w);
    CHECK(oracle::rel(lamb_shift(a, "e", c).value, le) <= 1e-9);
    CHECK(oracle::rel(lamb_shift(a, "g", c).value, lg) <= 1e-9);
  }
  CHECK_THROWS_AS(lamb_shift(build_two_level(1.0, 1.0), "e", 0.5), ConfigError);
}

TEST_CASE("total shift per mode is gauge invariant for the oscillator") {
  const AtomModel osc = build_oscillator(1.0, 1.0, 8);
  testgen::Gen g(14);
  for (int i = 0; i < 300; ++i) {
    const double w = g.log_uniform(1e-3, 1e3);
    for (const char* s : {"0", "1", "2", "3"}) {
      const double c = total_shift_mode(osc, s, kC, w), p = total_shift_mode(osc, s, kP, w);
      CHECK(oracle::rel(c, p) <= 1e-10);
    }
  }
  for (double cutoff : {1e2, 1e3}) {
    const double c = total_shift(osc, "1", kC, cutoff).value, p = total_shift(osc, "1", kP, cutoff).value;
    CHECK(oracle::rel(c, p) <= 1e-10);
  }
}

TEST_CASE("total shift per mode differs for the two-level atom") {
  const AtomModel a = build_two_level(1.0, 1.0);
  double worst = 0.0;
  for (double w : {0.1, 1.0, 10.0})
    worst = std::max(worst, oracle::rel(total_shift_mode(a, "e", kC, w), total_shift_mode(a, "e", kP, w)));
  CHECK(worst > 1e-3);
}

TEST_CASE("Coulomb per-mode terms against a direct evaluation") {
  // Oscillator, state s: rho (e^2/(4 m w) - sum_n |p_ns|^2/(2 m^2 w)/(w_ns + w)), rho = w^2/(3 pi^2).
  const AtomModel osc = build_oscillator(1.0, 1.0, 6);
  for (double w : {0.01, 0.5, 2.0, 40.0}) {
    const double rho = w * w / (3.0 * oracle::kPi * oracle::kPi);
    double expect = rho / (4.0 * w);
    for (int n : {0, 2}) {
      const double p2 = std::norm(osc.momentum(static_cast<std::size_t>(n), 1)[0]);
      expect -= rho * p2 / (2.0 * w) / ((n - 1.0) + w);
    }
    CHECK(oracle::rel(total_shift_mode(osc, "1", kC, w), expect) <= 1e-13);
  }
}

TEST_CASE("zero coupling leaves only the state-independent term") {
  const AtomModel a = build_two_level(1.0, 0.0);
  for (double w : {0.1, 1.0, 10.0}) {
    const auto terms = total_shift_mode_terms(a, "e", kP, w);
    for (double t : terms) CHECK(t == 0.0);
    CHECK(total_shift_mode(a, "e", kC, w) == total_shift_mode(a, "g", kC, w));
  }
}
