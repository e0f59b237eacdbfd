#include "app.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "capi.hpp"
#include "commands.hpp"
#include "common/error.hpp"

namespace gaugeline::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class T>
void opt(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void flag(CLI::App* app, const std::string& name, std::optional<bool>& target, bool value,
          const std::string& help) {
  app->add_flag_callback(name, [&target, value] { target = value; }, help);
}

void grid_options(CLI::App* app, Scenario& f) {
  opt(app, "--grid-min", f.grid.min, "lowest grid frequency");
  opt(app, "--grid-max", f.grid.max, "highest grid frequency");
  opt(app, "--points", f.grid.points, "number of grid points (>= 2)");
  flag(app, "--log-grid", f.grid.log, true, "logarithmic grid spacing");
  app->add_option_function<std::string>(
      "--reps", [&f](const std::string& v) { f.reps = split_list(v); },
      "comma-separated representations: coulomb, poincare, symmetric, alpha:<a>");
  flag(app, "--log-scale", f.plot.log_scale, true, "plot ln S instead of S");
  opt(app, "--title", f.plot.title, "plot title");
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Natural lineshapes, fluorescence rates and pulse-excited spectra across gauge "
               "representations.",
               "gaugeline"};
  app.set_version_flag("--version", std::string(gl_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Scenario flags;
  std::string scenario_path;
  bool seedless = false;
  std::string format = "csv";
  app.add_option_function<std::string>("--out-dir", [&](const std::string& v) { flags.out_dir = v; },
                                        "directory for all outputs (default .)");
  app.add_option("--format", format, "data format")->check(CLI::IsMember({"csv"}));
  app.add_option_function<std::string>("--plot", [&](const std::string& v) { flags.plot.format = v; },
                                       "emit a plot document")
      ->check(CLI::IsMember({"svg", "gnuplot", "none"}));
  opt(&app, "--cutoff", flags.cutoff, "UV cutoff for level shifts (default 1000)");
  app.add_flag("--seedless", seedless, "reserved; rejected");

  auto* ls = app.add_subcommand("lineshape", "spontaneous-emission lineshape S(omega_k)");
  auto* fl = app.add_subcommand("fluorescence", "resonance-fluorescence rate sweep");
  auto* lamb = app.add_subcommand("lamb-line", "Lamb-line stimulated-decay rate sweep");
  auto* pu = app.add_subcommand("pulse", "spectrum after rectangular pi-pulse excitation");
  auto* ve = app.add_subcommand("verify", "run the invariance and oracle suite");
  auto* pl = app.add_subcommand("plot", "plot spectrum CSV files");
  auto* ru = app.add_subcommand("run", "run a scenario file, mode taken from the file");

  for (auto* sub : {ls, fl, lamb, pu, ve})
    sub->add_option("--scenario", scenario_path, "scenario file; flags override its values")
        ->check(CLI::ExistingFile);
  ru->add_option("scenario", scenario_path, "scenario file")->required()->check(CLI::ExistingFile);

  for (auto* sub : {ls, fl, lamb, pu}) grid_options(sub, flags);
  for (auto* sub : {ls, fl, pu}) opt(sub, "--gamma", flags.gamma, "on-shell decay rate");
  for (auto* sub : {ls, fl}) opt(sub, "--omega-eg", flags.omega_eg, "transition frequency");

  ls->add_option_function<std::string>(
      "--lamb-shift", [&](const std::string& v) { flags.lamb_shift = v; },
      "line shift: a number or 'auto' (two-level value at the cutoff)");
  flag(ls, "--suppress-lamb-shift", flags.suppress_lamb_shift, true, "set the line shift to 0");
  flag(ls, "--offshell-gamma", flags.offshell_gamma, true,
       "experimental: frequency-dependent width in the denominator");

  for (auto* sub : {fl, lamb}) {
    opt(sub, "--intensity", flags.intensity, "incident intensity S");
    opt(sub, "--dipole-proj", flags.dipole_proj, "|e.d| for the driven transition");
  }
  opt(lamb, "--preset", flags.preset, "named parameter set (lamb-hydrogen)");
  opt(lamb, "--omega", flags.omega, "2s-2p separation");
  opt(lamb, "--omega-prime", flags.omega_prime, "2p-1s frequency");
  opt(lamb, "--gamma-2p1s", flags.gamma_2p1s, "2p-1s decay rate");

  opt(pu, "--rabi", flags.rabi, "Rabi frequency (0: no pulse)");
  opt(pu, "--omega-0", flags.omega_0, "transition frequency");
  opt(pu, "--omega-l", flags.omega_l, "laser frequency");
  opt(pu, "--delta-l", flags.delta_l, "laser detuning omega_0 - omega_l");
  opt(pu, "--alpha-laser", flags.alpha_laser, "laser mixing weight (default: from representation)");
  flag(pu, "--no-rwa", flags.rwa, false, "keep counter-rotating laser terms in the dynamics");
  flag(pu, "--field-during-pulse", flags.field_during_pulse, true,
       "couple the discretized field throughout (trajectory only)");
  flag(pu, "--references", flags.references, true, "also write Lorentzian reference spectra");
  flag(pu, "--no-trajectory", flags.trajectory, false, "skip the amplitude trajectory");
  pu->add_option_function<std::string>(
      "--scan-delta-l",
      [&](const std::string& v) {
        std::vector<double> values;
        for (const auto& item : split_list(v)) {
          std::size_t used = 0;
          double x = 0.0;
          try {
            x = std::stod(item, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != item.size())
            throw CLI::ValidationError("--scan-delta-l", "'" + item + "' is not a number");
          values.push_back(x);
        }
        flags.scan_delta_l = values;
      },
      "comma-separated laser detunings for the sensitivity scan");

  opt(ve, "--report", flags.report, "report file (default verify_report.json in --out-dir)");
  std::string report_to_check;
  ve->add_option("--check-report", report_to_check,
                 "re-check an existing report instead of running the suite; writes nothing")
      ->check(CLI::ExistingFile);

  PlotRequest plot;
  pl->add_option("inputs", plot.inputs, "spectrum CSV files")->required()->check(CLI::ExistingFile);
  pl->add_option("--output", plot.output, "output file name");
  pl->add_flag("--log-scale", plot.log_scale, "plot ln S");
  pl->add_option("--title", plot.title, "plot title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (seedless)
      throw CliError(kExitParse,
                     "--seedless is reserved: nothing here draws random numbers, so there is no seed to drop");
    (void)format;

    if (pl->parsed()) {
      plot.format = flags.plot.format.value_or("svg");
      if (plot.format == "none") throw CliError(kExitParse, "plot needs --plot svg or gnuplot");
      plot.out_dir = flags.out_dir.value_or(".");
      return commit(execute_plot(plot), plot.out_dir, out);
    }

    if (!report_to_check.empty()) return check_report_file(report_to_check, out);

    Scenario file;
    if (!scenario_path.empty()) file = load_scenario(scenario_path);
    std::string mode;
    for (auto* sub : {ls, fl, lamb, pu, ve})
      if (sub->parsed()) mode = sub->get_name();
    if (!mode.empty()) {
      if (file.mode && *file.mode != mode)
        throw CliError(kExitParse, "scenario '" + scenario_path + "' is for mode '" + *file.mode +
                                       "', not '" + mode + "'");
      flags.mode = mode;
    }
    const Resolved r = resolve(merge(file, flags));
    return commit(execute(r), r.out_dir, out);
  } catch (const CliError& e) {
    err << "gaugeline: " << e.what() << "\n";
    return e.code();
  } catch (const gaugeline::Error& e) {
    err << "gaugeline: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::Config:
        return kExitParse;
      case ErrorKind::Domain:
        return kExitDomain;
      default:
        return kExitIo;
    }
  } catch (const std::exception& e) {
    err << "gaugeline: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace gaugeline::cli
