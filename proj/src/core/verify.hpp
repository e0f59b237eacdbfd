#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/atom.hpp"

namespace gaugeline {

struct Check {
  std::string name;
  std::string description;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // residual <= tolerance
  /// Documented failure (e.g. a sum rule the model cannot satisfy).
  bool expected_failure = false;
  /// The identity being tested, in words.
  std::string anchor;
};

/// "pass", "FAIL", "expected-fail" or "unexpected-pass".
std::string status_of(const Check& check);
Check make_check(std::string name, std::string description, double residual, double tolerance,
                 std::string anchor, bool expected_failure = false);

struct VerificationReport {
  std::vector<Check> checks;  // sorted by name
  std::vector<std::pair<std::string, std::string>> environment;

  /// True iff every check not marked expected_failure passed.
  bool ok() const;
  void sort();
  std::string to_json() const;
  static VerificationReport from_json(const std::string& text);
  /// Fixed-width human-readable table.
  std::string to_table() const;
};

struct VerifyOptions {
  std::vector<double> cutoffs{1e2, 1e3};
  int table_grid_points = 1000;
  int shift_grid_points = 2000;
  int ode_modes = 201;
};

Check check_gamma_invariance(const AtomModel& model, const std::string& upper,
                             const std::string& lower, const std::string& name);
/// Oscillator per-mode and integrated checks, the two-level expected
/// failure and the zero-coupling case.
std::vector<Check> check_total_shift_invariance(double cutoff, int grid_points = 2000);
std::vector<Check> check_table_consistency(int grid_points = 1000);

struct PulseOracleParams {
  double omega_0 = 1.0;
  double rabi = 1.0;
  double gamma = 0.1;
  int modes = 201;
};
std::vector<Check> check_ode_oracle(const PulseOracleParams& params);

/// Every check the full suite must contain.
const std::vector<std::string>& required_check_names();
std::vector<std::string> missing_checks(const VerificationReport& report);

VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace gaugeline
