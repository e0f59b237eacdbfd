#include <doctest.h>

#include "common/error.hpp"
#include "core/spectrum.hpp"

using namespace gaugeline;

TEST_CASE("grids") {
  const auto lin = make_grid(0.5, 2.5, 5);
  CHECK(lin == std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5});
  const auto lg = make_grid(1e-2, 1e2, 5, GridScale::Log);
  CHECK(lg.front() == 1e-2);
  CHECK(lg.back() == 1e2);
  CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 1), ConfigError);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 3), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 3, GridScale::Log), DomainError);
}

TEST_CASE("spectrum invariants and CSV") {
  SpectrumMeta m;
  m.representation = "coulomb";
  m.gamma = 0.1;
  m.omega_eg = 1.0;
  m.cutoff = 1000.0;
  Spectrum s({0.5, 1.0}, {0.25, 0.1}, m);
  CHECK(s.integral() == doctest::Approx(0.0875));
  CHECK(s.to_csv() ==
        "omega_k,S,representation,gamma,omega_eg,lamb_shift,cutoff\n"
        "0.5,0.25,coulomb,0.10000000000000001,1,0,1000\n"
        "1,0.10000000000000001,coulomb,0.10000000000000001,1,0,1000\n");
  s.set_extra_column("n_factor", {2.0, 1.0});
  CHECK(s.to_csv().substr(0, 66) ==
        "omega_k,S,representation,gamma,omega_eg,lamb_shift,cutoff,n_factor");
  CHECK_THROWS_AS(Spectrum({1.0, 0.5}, {0.0, 0.0}, m), ConfigError);
  CHECK_THROWS_AS(Spectrum({0.5, 1.0}, {-1.0, 0.0}, m), DomainError);
  CHECK_THROWS_AS(Spectrum({0.5, 1.0}, {0.0}, m), ConfigError);
  CHECK_THROWS_AS(s.set_extra_column("x", {1.0}), ConfigError);
}

TEST_CASE("format_g17 round-trips") {
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_g17(1.0 / 3.0)) == 1.0 / 3.0);
}
