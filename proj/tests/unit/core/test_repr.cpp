#include <doctest.h>

#include "core/repr.hpp"
#include "common/error.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace gaugeline;

TEST_CASE("representation names round-trip through parse") {
  for (const char* text : {"coulomb", "poincare", "symmetric", "alpha:0.3", "alpha:0", "alpha:1"}) {
    const auto rep = GaugeRepresentation::parse(text);
    CHECK(GaugeRepresentation::parse(rep.name()) == rep);
  }
  CHECK(GaugeRepresentation::parse("alpha:0.25").custom_alpha() == 0.25);
}

TEST_CASE("malformed representations are rejected") {
  CHECK_THROWS_AS(GaugeRepresentation::parse("gauge"), ConfigError);
  CHECK_THROWS_AS(GaugeRepresentation::parse("alpha:"), ConfigError);
  CHECK_THROWS_AS(GaugeRepresentation::parse("alpha:0.3x"), ConfigError);
  CHECK_THROWS_AS(GaugeRepresentation::parse("alpha:1.5"), DomainError);
  CHECK_THROWS_AS(GaugeRepresentation::custom(-0.1), DomainError);
  CHECK_THROWS_AS(GaugeRepresentation::custom(NAN), DomainError);
}

TEST_CASE("alpha endpoints dispatch like the named gauges") {
  CHECK(GaugeRepresentation::custom(0.0).canonical_kind() == GaugeKind::Coulomb);
  CHECK(GaugeRepresentation::custom(1.0).canonical_kind() == GaugeKind::Poincare);
  CHECK(GaugeRepresentation::custom(0.5).canonical_kind() == GaugeKind::CustomConstant);
}

TEST_CASE("coupling pair matches the mixing formula") {
  testgen::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const double wk = g.log_uniform(1e-3, 1e3), w0 = g.log_uniform(1e-2, 1e2);
    const double a = g.uniform(0.0, 1.0);
    const auto p = coupling_pair(GaugeRepresentation::custom(a), wk, w0);
    CHECK(oracle::rel(p.u_minus, oracle::u_minus(a, wk, w0)) <= 1e-14);
    CHECK(std::abs(p.u_plus - oracle::u_plus(a, wk, w0)) <=
          1e-14 * (std::sqrt(w0 / wk) + std::sqrt(wk / w0)));

    const auto c = coupling_pair(GaugeRepresentation::coulomb(), wk, w0);
    CHECK(c.u_plus == c.u_minus);
    const auto s = coupling_pair(GaugeRepresentation::symmetric(), wk, w0);
    CHECK(s.u_plus == 0.0);
    CHECK(oracle::rel(s.u_minus, oracle::u_minus(oracle::symmetric_alpha(wk, w0), wk, w0)) <= 1e-12);
  }
}

TEST_CASE("on resonance every representation has u^- = 1") {
  for (const char* text : {"coulomb", "poincare", "symmetric", "alpha:0.3"}) {
    const auto p = coupling_pair(GaugeRepresentation::parse(text), 2.5, 2.5);
    CHECK(p.u_minus == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("alpha_k of the symmetric representation") {
  CHECK(alpha_k(GaugeRepresentation::symmetric(), 1.0, 1.0) == 0.5);
  CHECK(alpha_k(GaugeRepresentation::symmetric(), 3.0, 1.0) == 0.25);
  CHECK(alpha_k(GaugeRepresentation::coulomb(), 3.0, 1.0) == 0.0);
  CHECK(alpha_k(GaugeRepresentation::poincare(), 3.0, 1.0) == 1.0);
  CHECK_THROWS_AS(alpha_k(GaugeRepresentation::symmetric(), 0.0, 1.0), DomainError);
}

TEST_CASE("shortest_repr reads back exactly") {
  testgen::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const double v = g.log_uniform(1e-8, 1e8);
    CHECK(std::stod(shortest_repr(v)) == v);
  }
  CHECK(shortest_repr(0.1) == "0.1");
}
