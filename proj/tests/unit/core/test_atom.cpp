#include <doctest.h>

#include "common/error.hpp"
#include "core/atom.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace gaugeline;

TEST_CASE("two-level builder") {
  const AtomModel a = build_two_level(2.0, 0.5);
  CHECK(a.size() == 2);
  CHECK(a.transition_frequency(a.index_of("e"), a.index_of("g")) == 2.0);
  CHECK(a.dipole(1, 0)[2] == std::complex<double>(0.5, 0.0));
  CHECK(a.dipole(0, 1)[2] == std::complex<double>(0.5, 0.0));
  CHECK_FALSE(build_two_level(1.0, 0.0).coupled(1, 0));
  CHECK_THROWS_AS(a.index_of("x"), ConfigError);
}

TEST_CASE("momentum follows from position: p_nm = i m w_nm r_nm") {
  testgen::Gen g(3);
  for (int i = 0; i < 50; ++i) {
    const double w = g.log_uniform(0.1, 10.0), m = g.log_uniform(0.1, 10.0);
    const AtomModel a = build_oscillator(w, m, g.integer(3, 8));
    for (std::size_t n = 0; n + 1 < a.size(); ++n) {
      const auto r = a.position(n + 1, n);
      const auto p = a.momentum(n + 1, n);
      const std::complex<double> expect = std::complex<double>(0.0, m * w) * r[0];
      CHECK(std::abs(p[0] - expect) <= 1e-14 * std::abs(expect));
    }
  }
}

TEST_CASE("oscillator satisfies TRK below its top level") {
  for (int n_levels : {3, 6, 10}) {
    const AtomModel a = build_oscillator(1.3, 0.7, n_levels);
    for (int s = 0; s + 1 < n_levels; ++s) {
      const double sum = trk_sum(a, std::to_string(s), {1.0, 0.0, 0.0});
      CHECK(sum == doctest::Approx(1.0 / (2.0 * 0.7)).epsilon(1e-13));
    }
  }
}

TEST_CASE("two-level atom violates TRK") {
  const AtomModel a = build_two_level(1.0, 1.0);
  CHECK(trk_sum(a, "e", {0, 0, 1}) == doctest::Approx(-1.0));
  CHECK(trk_sum(a, "g", {0, 0, 1}) == doctest::Approx(1.0));
}

TEST_CASE("atom validation") {
  CHECK_THROWS_AS(AtomModel({{"g", 0.0}}, {}), ConfigError);
  CHECK_THROWS_AS(AtomModel({{"g", 0.0}, {"e", 0.0}}, {}), ConfigError);
  CHECK_THROWS_AS(AtomModel({{"g", 0.0}, {"g", 1.0}}, {}), ConfigError);
  CHECK_THROWS_AS(AtomModel({{"g", 0.0}, {"e", 1.0}}, {}, -1.0), DomainError);
  CHECK_THROWS_AS(build_oscillator(1.0, 1.0, 2), ConfigError);
  CHECK_THROWS_AS(AtomModel({{"g", 0.0}, {"e", 1.0}}, {{"e", "g", {1.0, 0.0, 0.0}}}, 1.0, 1.0,
                            Vec3{0.0, 0.0, 1.0}),
                  ConfigError);
}

TEST_CASE("atom text format") {
  const char* text =
      "mass: 2\n"
      "levels:\n"
      "  g: 0\n"
      "  e: 1.5\n"
      "dipoles:\n"
      "  e g: 0 0 0.25\n";
  const AtomModel a = parse_atom(text, "inline");
  CHECK(a.mass() == 2.0);
  CHECK(a.level(1).energy == 1.5);
  CHECK(a.dipole(1, 0)[2].real() == 0.25);

  CHECK_THROWS_AS(parse_atom("levels:\n  g: 0\n  e: 1\nextra:\n  a: 1\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_atom("levels:\n  g: 0\n  e: 1\ndipoles:\n  e: 1 2 3\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_atom("color: red\nlevels:\n  g: 0\n  e: 1\n", "x"), ParseError);
  CHECK_THROWS_AS(load_atom("/nonexistent/file.atom"), IoError);
  try {
    parse_atom("levels:\n  g: 0\n  e: one\n", "x.atom");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).rfind("x.atom:3:", 0) == 0);
  }
}

TEST_CASE("preset atom files load") {
  const AtomModel two = load_atom(GAUGELINE_PRESET_DIR "/atoms/two_level.atom");
  CHECK(two.size() == 2);
  const AtomModel osc = load_atom(GAUGELINE_PRESET_DIR "/atoms/oscillator.atom");
  const AtomModel built = build_oscillator(1.0, 1.0, 6);
  REQUIRE(osc.size() == built.size());
  for (std::size_t n = 0; n + 1 < osc.size(); ++n)
    CHECK(std::abs(osc.dipole(n + 1, n)[0] - built.dipole(n + 1, n)[0]) <= 1e-15);
  CHECK(osc.mobile_dimensions() == 1.0);
}
