#include <doctest.h>

#include <algorithm>

#include "core/verify.hpp"

using namespace gaugeline;

TEST_CASE("check status") {
  CHECK(status_of(make_check("a", "", 1e-13, 1e-12, "")) == "pass");
  CHECK(status_of(make_check("a", "", 1e-11, 1e-12, "")) == "FAIL");
  CHECK(status_of(make_check("a", "", 1.0, 1e-12, "", true)) == "expected-fail");
  CHECK(status_of(make_check("a", "", 0.0, 1e-12, "", true)) == "unexpected-pass");
}

TEST_CASE("full suite passes, is complete and round-trips") {
  const VerificationReport r = run_verification();
  CHECK(r.ok());
  CHECK(missing_checks(r).empty());
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const Check& a, const Check& b) { return a.name < b.name; }));
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed != c.expected_failure, c.name);
  const std::string json = r.to_json();
  CHECK(VerificationReport::from_json(json).to_json() == json);
  CHECK(run_verification().to_json() == json);

  for (const auto& name : required_check_names()) {
    VerificationReport cut = r;
    cut.checks.erase(std::remove_if(cut.checks.begin(), cut.checks.end(),
                                    [&](const Check& c) { return c.name == name; }),
                     cut.checks.end());
    CHECK(missing_checks(cut) == std::vector<std::string>{name});
  }
}

TEST_CASE("two-level shift check documents its failure") {
  const auto checks = check_total_shift_invariance(1e3);
  const auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) {
    return c.name.find("two_level") != std::string::npos;
  });
  REQUIRE(it != checks.end());
  CHECK(it->expected_failure);
  CHECK(it->residual > 0.0);
}
