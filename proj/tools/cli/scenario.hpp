#pragma once

// Run description shared by scenario files and command-line flags.
//
// Every field is optional so that a file and a set of flags can be merged
// field by field (flags win). resolve() fills the remaining defaults for
// the chosen mode and validates the result.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaugeline::cli {

inline constexpr const char* kModes[] = {"lineshape", "fluorescence", "lamb-line", "pulse",
                                         "verify"};

struct GridSpec {
  std::optional<double> min;
  std::optional<double> max;
  std::optional<int> points;
  std::optional<bool> log;
};

struct PlotSpec {
  std::optional<std::string> format;  // "svg" | "gnuplot" | "none"
  std::optional<bool> log_scale;      // plot ln S
  std::optional<std::string> title;
};

struct Scenario {
  std::string source = "<flags>";
  std::optional<std::string> mode;
  std::optional<std::vector<std::string>> reps;
  std::optional<double> cutoff;
  std::optional<std::string> out_dir;
  GridSpec grid;
  PlotSpec plot;

  // lineshape, fluorescence, pulse
  std::optional<double> gamma;
  // lineshape, fluorescence
  std::optional<double> omega_eg;
  // lineshape; "auto" computes the two-level shift
  std::optional<std::string> lamb_shift;
  std::optional<bool> suppress_lamb_shift;
  std::optional<bool> offshell_gamma;

  // fluorescence, lamb-line
  std::optional<double> intensity;
  std::optional<double> dipole_proj;

  // lamb-line
  std::optional<std::string> preset;
  std::optional<double> omega;
  std::optional<double> omega_prime;
  std::optional<double> gamma_2p1s;

  // pulse
  std::optional<double> rabi;
  std::optional<double> omega_0;
  std::optional<double> omega_l;
  std::optional<double> delta_l;
  std::optional<double> alpha_laser;
  std::optional<bool> rwa;
  std::optional<bool> field_during_pulse;
  std::optional<bool> references;
  std::optional<bool> trajectory;
  std::optional<std::vector<double>> scan_delta_l;

  // verify
  std::optional<std::string> report;
};

/// Parses scenario text; throws gaugeline::ParseError on malformed input or
/// unknown keys and sections.
Scenario parse_scenario(std::string_view text, const std::string& source_name);
Scenario load_scenario(const std::string& path);

/// Field-wise overlay: every value present in `top` replaces the one in `base`.
Scenario merge(const Scenario& base, const Scenario& top);

/// Scenario with every field needed by its mode filled in.
struct Resolved {
  std::string mode;
  std::string source;
  std::vector<std::string> reps;
  double cutoff = 1e3;
  std::string out_dir = ".";
  double grid_min = 0.0;
  double grid_max = 0.0;
  int grid_points = 0;
  bool grid_log = false;
  std::string plot_format = "none";
  bool plot_log = false;
  std::string title;

  double gamma = 0.1;
  double omega_eg = 1.0;
  bool lamb_shift_auto = true;
  double lamb_shift = 0.0;
  bool offshell_gamma = false;

  double intensity = 1.0;
  double dipole_proj = 1.0;

  std::string preset;
  double omega = 1.0;
  double omega_prime = 1e3;
  double gamma_2p1s = 0.6;

  double rabi = 1.0;
  double omega_0 = 1.0;
  double omega_l = 1.0;
  std::optional<double> alpha_laser;
  bool rwa = true;
  bool field_during_pulse = false;
  bool references = false;
  bool trajectory = true;
  std::vector<double> scan_delta_l;

  std::string report;
};

/// Throws CliError (exit 2) for missing or inconsistent settings.
Resolved resolve(const Scenario& scenario);

}  // namespace gaugeline::cli
