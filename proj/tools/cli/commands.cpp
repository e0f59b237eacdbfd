#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <ostream>

#include "capi.hpp"

namespace gaugeline::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<double> make_grid(const Resolved& r) {
  std::vector<double> grid(static_cast<std::size_t>(r.grid_points));
  check(gl_make_grid(r.grid_min, r.grid_max, r.grid_points, r.grid_log ? 1 : 0, grid.data(),
                     grid.size()));
  return grid;
}

json spectrum_record(const gl_spectrum* s, const std::string& file) {
  json rec;
  rec["file"] = file;
  rec["representation"] = gl_spectrum_representation(s);
  rec["note"] = gl_spectrum_note(s);
  json params = json::object();
  for (size_t i = 0; i < gl_spectrum_param_count(s); ++i) {
    const char* k = nullptr;
    const char* v = nullptr;
    check(gl_spectrum_param(s, i, &k, &v));
    params[k] = v;
  }
  rec["params"] = params;
  return rec;
}

Series series_of(const gl_spectrum* s, const std::string& key, const std::string& label) {
  const size_t n = gl_spectrum_size(s);
  Series out;
  out.key = key;
  out.label = label;
  out.x.assign(gl_spectrum_grid(s), gl_spectrum_grid(s) + n);
  out.y.assign(gl_spectrum_values(s), gl_spectrum_values(s) + n);
  return out;
}

// Adds the CSV, plot series and metadata record for one spectrum.
void add_spectrum(RunResult& res, const std::string& mode, const gl_spectrum* s,
                  const std::string& key, const std::string& label) {
  const std::string file = mode + "_" + file_stem(key) + ".csv";
  res.files.push_back({file, spectrum_csv(s)});
  res.series.push_back(series_of(s, key, label));
  res.metadata["spectra"].push_back(spectrum_record(s, file));
}

void add_plot(RunResult& res, const Resolved& r, const std::string& default_title,
              const std::string& subtitle, const std::string& x_label,
              const std::string& y_label) {
  if (r.plot_format == "none") return;
  PlotStyle style;
  style.title = r.title.empty() ? default_title : r.title;
  style.subtitle = subtitle;
  style.x_label = x_label;
  style.y_label = y_label;
  style.log_scale = r.plot_log;
  const std::string svg = r.mode + ".svg";
  if (r.plot_format == "svg")
    res.files.push_back({svg, render_svg(res.series, style)});
  else
    res.files.push_back({r.mode + ".gp", render_gnuplot(res.series, style, svg)});
}

json common_params(const Resolved& r) {
  json p;
  p["mode"] = r.mode;
  p["scenario"] = r.source;
  p["representations"] = r.reps;
  p["cutoff"] = r.cutoff;
  p["grid"] = {{"min", r.grid_min},
               {"max", r.grid_max},
               {"points", r.grid_points},
               {"scale", r.grid_log ? "log" : "linear"}};
  p["plot"] = {{"format", r.plot_format}, {"log_scale", r.plot_log}};
  return p;
}

// Two-level line shift for a dipole giving the requested on-shell rate.
double auto_lamb_shift(const Resolved& r) {
  if (!(r.gamma > 0.0) || !(r.omega_eg > 0.0))
    throw CliError(kExitDomain, "gamma and omega_eg must be positive, got " + shortest(r.gamma) +
                                    " and " + shortest(r.omega_eg));
  const double d = std::sqrt(3.0 * M_PI * r.gamma / (r.omega_eg * r.omega_eg * r.omega_eg));
  gl_atom* raw = nullptr;
  check(gl_atom_two_level(r.omega_eg, d, &raw));
  AtomPtr atom(raw);
  double e = 0.0, g = 0.0;
  check(gl_lamb_shift(atom.get(), "e", r.cutoff, &e, nullptr));
  check(gl_lamb_shift(atom.get(), "g", r.cutoff, &g, nullptr));
  return e - g;
}

RunResult run_lineshape(const Resolved& r) {
  RunResult res;
  const auto grid = make_grid(r);
  const double shift = r.lamb_shift_auto ? auto_lamb_shift(r) : r.lamb_shift;
  res.metadata["parameters"] = common_params(r);
  res.metadata["parameters"]["gamma"] = r.gamma;
  res.metadata["parameters"]["omega_eg"] = r.omega_eg;
  res.metadata["parameters"]["lamb_shift"] = shift;
  res.metadata["parameters"]["lamb_shift_source"] = r.lamb_shift_auto ? "two-level, computed" : "given";
  res.metadata["parameters"]["offshell_gamma"] = r.offshell_gamma ? "experimental" : "off";
  for (const auto& name : r.reps) {
    gl_lineshape_params p;
    gl_lineshape_params_default(&p);
    p.gauge = parse_gauge(name);
    p.omega_eg = r.omega_eg;
    p.gamma = r.gamma;
    p.lamb_shift = shift;
    p.cutoff = r.cutoff;
    p.offshell_gamma = r.offshell_gamma ? 1 : 0;
    gl_spectrum* raw = nullptr;
    check(gl_lineshape(&p, grid.data(), grid.size(), &raw));
    SpectrumPtr s(raw);
    add_spectrum(res, r.mode, s.get(), gauge_name(p.gauge), gauge_display_name(p.gauge));
  }
  add_plot(res, r, "Spontaneous-emission lineshape",
           "Γ = " + shortest(r.gamma) + ", ω_eg = " + shortest(r.omega_eg) +
               ", Δω_LS = " + shortest(shift) + ", cutoff = " + shortest(r.cutoff),
           "ω_k", "S(ω_k)");
  return res;
}

RunResult run_fluorescence(const Resolved& r) {
  RunResult res;
  const auto grid = make_grid(r);
  res.metadata["parameters"] = common_params(r);
  res.metadata["parameters"]["gamma"] = r.gamma;
  res.metadata["parameters"]["omega_eg"] = r.omega_eg;
  res.metadata["parameters"]["intensity"] = r.intensity;
  res.metadata["parameters"]["dipole_proj"] = r.dipole_proj;
  for (const auto& name : r.reps) {
    const gl_gauge g = parse_gauge(name);
    const gl_sharp_line sc{r.intensity, r.omega_eg, r.omega_eg, r.gamma, r.dipole_proj, g};
    gl_spectrum* raw = nullptr;
    check(gl_fluorescence_sweep(&sc, grid.data(), grid.size(), &raw));
    SpectrumPtr s(raw);
    check(gl_spectrum_set_meta(s.get(), r.gamma, r.omega_eg, 0.0, r.cutoff));
    add_spectrum(res, r.mode, s.get(), gauge_name(g), gauge_display_name(g));
  }
  add_plot(res, r, "Resonance-fluorescence rate",
           "Γ = " + shortest(r.gamma) + ", ω_eg = " + shortest(r.omega_eg) +
               ", S = " + shortest(r.intensity) + ", |e·d| = " + shortest(r.dipole_proj),
           "ω_0", "γ(ω_0)");
  return res;
}

RunResult run_lamb_line(const Resolved& r) {
  RunResult res;
  const auto grid = make_grid(r);
  res.metadata["parameters"] = common_params(r);
  res.metadata["parameters"]["preset"] = r.preset.empty() ? "none" : r.preset;
  res.metadata["parameters"]["intensity"] = r.intensity;
  res.metadata["parameters"]["omega"] = r.omega;
  res.metadata["parameters"]["omega_prime"] = r.omega_prime;
  res.metadata["parameters"]["gamma_2p1s"] = r.gamma_2p1s;
  res.metadata["parameters"]["dipole_proj"] = r.dipole_proj;
  if (!r.preset.empty())
    res.metadata["parameters"]["preset_note"] = "placeholder values chosen for legible plots, not physical data";
  for (const auto& name : r.reps) {
    const gl_gauge g = parse_gauge(name);
    const gl_lamb_line sc{r.intensity, r.omega, r.omega_prime, r.gamma_2p1s, r.dipole_proj, g};
    gl_spectrum* raw = nullptr;
    check(gl_lamb_rate_sweep(&sc, grid.data(), grid.size(), &raw));
    SpectrumPtr s(raw);
    check(gl_spectrum_set_meta(s.get(), r.gamma_2p1s, r.omega, 0.0, r.cutoff));
    add_spectrum(res, r.mode, s.get(), gauge_name(g), gauge_display_name(g));
  }
  add_plot(res, r, "Lamb-line stimulated-decay rate",
           "ω = " + shortest(r.omega) + ", ω′ = " + shortest(r.omega_prime) +
               ", Γ_2p,1s = " + shortest(r.gamma_2p1s),
           "ω_0", "γ(ω_0)");
  return res;
}

std::string trajectory_csv(const gl_trajectory* t) {
  return fetch_string(
      [&](char* b, size_t c, size_t* n) { return gl_trajectory_to_csv(t, b, c, n); });
}

RunResult run_pulse(const Resolved& r) {
  RunResult res;
  const auto grid = make_grid(r);
  const double delta_l = r.omega_0 - r.omega_l;
  gl_pulse pulse{r.rabi, r.omega_l, r.alpha_laser ? 1 : 0, r.alpha_laser.value_or(0.0)};
  res.metadata["parameters"] = common_params(r);
  auto& p = res.metadata["parameters"];
  p["rabi"] = r.rabi;
  p["omega_0"] = r.omega_0;
  p["omega_l"] = r.omega_l;
  p["delta_l"] = delta_l;
  p["gamma"] = r.gamma;
  if (r.alpha_laser) p["alpha_laser"] = *r.alpha_laser;
  p["rwa"] = r.rwa;
  p["field_during_pulse"] = r.field_during_pulse;
  p["references"] = r.references;
  p["trajectory"] = r.trajectory;

  for (const auto& name : r.reps) {
    const gl_gauge g = parse_gauge(name);
    gl_spectrum* raw = nullptr;
    check(gl_pulse_spectrum(&pulse, g, r.omega_0, r.gamma, grid.data(), grid.size(), GL_PULSE_FULL,
                            &raw));
    SpectrumPtr s(raw);
    add_spectrum(res, r.mode, s.get(), gauge_name(g), gauge_display_name(g) + " (with laser)");
  }
  if (r.references) {
    const gl_gauge g = parse_gauge(r.reps.front());
    const std::pair<gl_pulse_variant, const char*> refs[] = {
        {GL_PULSE_LORENTZIAN, "Lorentzian reference"},
        {GL_PULSE_LORENTZIAN_LASER, "Lorentzian + laser"}};
    for (const auto& [variant, label] : refs) {
      gl_spectrum* raw = nullptr;
      check(gl_pulse_spectrum(&pulse, g, r.omega_0, r.gamma, grid.data(), grid.size(), variant, &raw));
      SpectrumPtr s(raw);
      add_spectrum(res, r.mode, s.get(), gl_spectrum_representation(s.get()), label);
    }
  }
  if (r.trajectory && r.rabi > 0.0) {
    gl_dynamics_options o;
    gl_dynamics_options_default(&o);
    o.rwa = r.rwa ? 1 : 0;
    o.include_field_during_pulse = r.field_during_pulse ? 1 : 0;
    for (const auto& name : r.reps) {
      const gl_gauge g = parse_gauge(name);
      gl_trajectory* raw = nullptr;
      const std::vector<double> modes = r.field_during_pulse ? grid : std::vector<double>{};
      check(gl_integrate_dynamics(&pulse, g, r.omega_0, r.gamma, modes.data(), modes.size(), &o, &raw));
      TrajectoryPtr t(raw);
      const std::string file = "pulse_trajectory_" + file_stem(gauge_name(g)) + ".csv";
      res.files.push_back({file, trajectory_csv(t.get())});
      double norm_err = 0.0;
      check(gl_trajectory_max_norm_error(t.get(), &norm_err));
      res.metadata["trajectories"].push_back(
          {{"file", file}, {"representation", gauge_name(g)}, {"max_norm_error", norm_err}});
    }
  }
  if (!r.scan_delta_l.empty()) {
    std::vector<gl_gauge> gauges;
    for (const auto& name : r.reps) gauges.push_back(parse_gauge(name));
    std::vector<double> out(gauges.size() * r.scan_delta_l.size());
    check(gl_pulse_detuning_scan(&pulse, gauges.data(), gauges.size(), r.scan_delta_l.data(),
                                 r.scan_delta_l.size(), r.omega_0, r.gamma, grid.data(), grid.size(),
                                 out.data()));
    std::string csv = "representation,delta_l,max_relative_deviation\n";
    char buf[64];
    for (std::size_t gi = 0; gi < gauges.size(); ++gi) {
      for (std::size_t d = 0; d < r.scan_delta_l.size(); ++d) {
        csv += gauge_name(gauges[gi]) + ",";
        std::snprintf(buf, sizeof buf, "%.17g", r.scan_delta_l[d]);
        csv += buf;
        std::snprintf(buf, sizeof buf, ",%.17g\n", out[gi * r.scan_delta_l.size() + d]);
        csv += buf;
      }
    }
    res.files.push_back({"pulse_scan.csv", csv});
  }
  add_plot(res, r, "Pulse-excited emission spectrum",
           "Ω = " + shortest(r.rabi) + ", δ_l = " + shortest(delta_l) + ", Γ = " +
               shortest(r.gamma) + ", ω_0 = " + shortest(r.omega_0),
           "ω_k", "S(ω_k)");
  return res;
}

RunResult run_verify(const Resolved& r) {
  RunResult res;
  gl_report* raw = nullptr;
  check(gl_verify_run(&raw));
  ReportPtr report(raw);
  res.console = fetch_string(
      [&](char* b, size_t c, size_t* n) { return gl_report_to_table(report.get(), b, c, n); });
  res.files.push_back({r.report, fetch_string([&](char* b, size_t c, size_t* n) {
                         return gl_report_to_json(report.get(), b, c, n);
                       })});
  const size_t missing = gl_report_missing_count(report.get());
  const bool ok = gl_report_ok(report.get()) && missing == 0;
  res.metadata["parameters"] = {{"mode", "verify"}, {"scenario", r.source}, {"report", r.report}};
  res.metadata["verification"] = {{"checks", gl_report_check_count(report.get())},
                                  {"missing", missing},
                                  {"ok", ok}};
  res.console += ok ? "verification passed\n" : "verification FAILED\n";
  res.exit_code = ok ? kExitOk : kExitVerify;
  return res;
}

}  // namespace

RunResult execute(const Resolved& r) {
  if (r.mode == "lineshape") return run_lineshape(r);
  if (r.mode == "fluorescence") return run_fluorescence(r);
  if (r.mode == "lamb-line") return run_lamb_line(r);
  if (r.mode == "pulse") return run_pulse(r);
  if (r.mode == "verify") return run_verify(r);
  throw CliError(kExitParse, "unknown mode '" + r.mode + "'");
}

int check_report_file(const std::string& path, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot read report '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  gl_report* raw = nullptr;
  check(gl_report_from_json(text.str().c_str(), &raw));
  ReportPtr report(raw);
  out << fetch_string(
      [&](char* b, size_t c, size_t* n) { return gl_report_to_table(report.get(), b, c, n); });
  const size_t missing = gl_report_missing_count(report.get());
  const bool ok = gl_report_ok(report.get()) && missing == 0;
  if (missing > 0) out << missing << " required check(s) missing from " << path << "\n";
  out << (ok ? "verification passed\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitVerify;
}

RunResult execute_plot(const PlotRequest& q) {
  RunResult res;
  for (const auto& path : q.inputs) res.series.push_back(read_spectrum_csv(path));
  PlotStyle style;
  style.title = q.title.empty() ? "Spectra" : q.title;
  style.log_scale = q.log_scale;
  style.x_label = "ω";
  std::string subtitle;
  for (const auto& path : q.inputs) subtitle += (subtitle.empty() ? "" : ", ") + std::filesystem::path(path).filename().string();
  style.subtitle = subtitle;
  const std::string base = q.output.empty() ? (q.format == "svg" ? "plot.svg" : "plot.gp") : q.output;
  if (q.format == "svg") {
    res.files.push_back({base, render_svg(res.series, style)});
  } else {
    const std::string svg = std::filesystem::path(base).replace_extension(".svg").filename().string();
    res.files.push_back({base, render_gnuplot(res.series, style, svg)});
  }
  res.metadata["parameters"] = {{"mode", "plot"}, {"inputs", q.inputs}, {"format", q.format},
                                {"log_scale", q.log_scale}};
  return res;
}

int commit(const RunResult& result, const std::string& out_dir, std::ostream& out) {
  json meta;
  meta["tool"] = "gaugeline";
  meta["version"] = gl_version();
  meta["generated_at"] = utc_timestamp();
  for (auto it = result.metadata.begin(); it != result.metadata.end(); ++it) meta[it.key()] = it.value();
  std::vector<Artifact> files = result.files;
  json outputs = json::array();
  for (const auto& f : files) outputs.push_back(f.path);
  meta["outputs"] = outputs;
  files.push_back({"run_metadata.json", meta.dump(2) + "\n"});
  const auto written = write_all(out_dir, files);
  out << result.console;
  for (const auto& w : written) out << "wrote " << w << "\n";
  return result.exit_code;
}

}  // namespace gaugeline::cli
