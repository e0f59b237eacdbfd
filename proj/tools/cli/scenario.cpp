#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "capi.hpp"
#include "textconf/textconf.hpp"

namespace gaugeline::cli {

namespace {

using textconf::Reader;

bool known_mode(std::string_view m) {
  return std::find(std::begin(kModes), std::end(kModes), m) != std::end(kModes);
}

bool is_mode_section(std::string_view name) { return known_mode(name) && name != "verify"; }

std::optional<std::vector<double>> number_list(Reader& r, std::string_view key) {
  const textconf::Entry* e = r.find(key);
  if (!e) return std::nullopt;
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= e->value.size()) {
    const std::size_t comma = e->value.find(',', pos);
    const std::string item =
        e->value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool ok = false;
    out.push_back(textconf::parse_number(item, &ok));
    if (!ok) r.fail(*e, "'" + e->key + "' expects comma-separated numbers, got '" + item + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void read_reps(Reader& r, Scenario& s) {
  const textconf::Entry* e = r.find("reps");
  if (!e) return;
  auto list = std::vector<std::string>{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = e->value.find(',', pos);
    std::string item =
        e->value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    gl_gauge g{};
    if (gl_gauge_parse(item.c_str(), &g) != GL_OK) r.fail(*e, gl_last_error());
    list.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  s.reps = list;
}

void read_lineshape(Reader& r, Scenario& s) {
  s.gamma = r.optional_number("gamma");
  s.omega_eg = r.optional_number("omega_eg");
  if (const textconf::Entry* e = r.find("lamb_shift")) {
    bool ok = e->value == "auto";
    if (!ok) textconf::parse_number(e->value, &ok);
    if (!ok) r.fail(*e, "'lamb_shift' expects a number or 'auto', got '" + e->value + "'");
    s.lamb_shift = e->value;
  }
  s.suppress_lamb_shift = r.optional_bool("suppress_lamb_shift");
  s.offshell_gamma = r.optional_bool("offshell_gamma");
}

void read_fluorescence(Reader& r, Scenario& s) {
  s.gamma = r.optional_number("gamma");
  s.omega_eg = r.optional_number("omega_eg");
  s.intensity = r.optional_number("intensity");
  s.dipole_proj = r.optional_number("dipole_proj");
}

void read_lamb_line(Reader& r, Scenario& s) {
  if (const textconf::Entry* e = r.find("preset")) {
    gl_lamb_line tmp{};
    if (gl_lamb_line_preset(e->value.c_str(), &tmp) != GL_OK) r.fail(*e, gl_last_error());
    s.preset = e->value;
  }
  s.intensity = r.optional_number("intensity");
  s.omega = r.optional_number("omega");
  s.omega_prime = r.optional_number("omega_prime");
  s.gamma_2p1s = r.optional_number("gamma_2p1s");
  s.dipole_proj = r.optional_number("dipole_proj");
}

void read_pulse(Reader& r, Scenario& s) {
  s.rabi = r.optional_number("rabi");
  s.gamma = r.optional_number("gamma");
  s.omega_0 = r.optional_number("omega_0");
  s.omega_l = r.optional_number("omega_l");
  s.delta_l = r.optional_number("delta_l");
  if (s.omega_l && s.delta_l) r.fail(*r.find("delta_l"), "give either omega_l or delta_l, not both");
  s.alpha_laser = r.optional_number("alpha_laser");
  s.rwa = r.optional_bool("rwa");
  s.field_during_pulse = r.optional_bool("field_during_pulse");
  s.references = r.optional_bool("references");
  s.trajectory = r.optional_bool("trajectory");
  s.scan_delta_l = number_list(r, "scan_delta_l");
}

template <class T>
void overlay(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

CliError config_error(const std::string& msg) { return CliError(kExitParse, msg); }

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& source_name) {
  const textconf::Document doc = textconf::parse(text, source_name);
  Scenario s;
  s.source = source_name;

  Reader top(doc, doc.top, "the top level");
  if (const textconf::Entry* e = top.find("mode")) {
    if (!known_mode(e->value)) top.fail(*e, "unknown mode '" + e->value + "'");
    s.mode = e->value;
  }
  read_reps(top, s);
  s.cutoff = top.optional_number("cutoff");
  s.out_dir = top.optional_string("out_dir");
  s.report = top.optional_string("report");
  top.finish();

  const textconf::Section* mode_section = nullptr;
  for (const auto& sec : doc.sections) {
    Reader r(doc, sec.entries, "section '" + sec.name + "'");
    if (sec.name == "grid") {
      s.grid.min = r.optional_number("min");
      s.grid.max = r.optional_number("max");
      if (auto p = r.optional_integer("points")) {
        if (*p < 2 || *p > 10000000) r.fail(*r.find("points"), "grid needs between 2 and 1e7 points");
        s.grid.points = static_cast<int>(*p);
      }
      if (const textconf::Entry* e = r.find("scale")) {
        if (e->value != "linear" && e->value != "log")
          r.fail(*e, "'scale' expects linear or log, got '" + e->value + "'");
        s.grid.log = e->value == "log";
      }
    } else if (sec.name == "plot") {
      if (const textconf::Entry* e = r.find("format")) {
        if (e->value != "svg" && e->value != "gnuplot" && e->value != "none")
          r.fail(*e, "'format' expects svg, gnuplot or none, got '" + e->value + "'");
        s.plot.format = e->value;
      }
      s.plot.log_scale = r.optional_bool("log_scale");
      s.plot.title = r.optional_string("title");
    } else if (is_mode_section(sec.name)) {
      if (mode_section)
        throw ParseError(source_name, sec.line, 1,
                         "section '" + sec.name + "' conflicts with section '" +
                             mode_section->name + "'");
      if (s.mode && *s.mode != sec.name)
        throw ParseError(source_name, sec.line, 1,
                         "section '" + sec.name + "' does not apply to mode '" + *s.mode + "'");
      mode_section = &sec;
      if (sec.name == "lineshape") read_lineshape(r, s);
      if (sec.name == "fluorescence") read_fluorescence(r, s);
      if (sec.name == "lamb-line") read_lamb_line(r, s);
      if (sec.name == "pulse") read_pulse(r, s);
    } else {
      throw ParseError(source_name, sec.line, 1, "unknown section '" + sec.name + "'");
    }
    r.finish();
  }
  if (!s.mode && mode_section) s.mode = mode_section->name;
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot open scenario '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

Scenario merge(const Scenario& base, const Scenario& top) {
  Scenario s = base;
  if (top.source != "<flags>") s.source = top.source;
  overlay(s.mode, top.mode);
  overlay(s.reps, top.reps);
  overlay(s.cutoff, top.cutoff);
  overlay(s.out_dir, top.out_dir);
  overlay(s.grid.min, top.grid.min);
  overlay(s.grid.max, top.grid.max);
  overlay(s.grid.points, top.grid.points);
  overlay(s.grid.log, top.grid.log);
  overlay(s.plot.format, top.plot.format);
  overlay(s.plot.log_scale, top.plot.log_scale);
  overlay(s.plot.title, top.plot.title);
  overlay(s.gamma, top.gamma);
  overlay(s.omega_eg, top.omega_eg);
  overlay(s.lamb_shift, top.lamb_shift);
  overlay(s.suppress_lamb_shift, top.suppress_lamb_shift);
  overlay(s.offshell_gamma, top.offshell_gamma);
  overlay(s.intensity, top.intensity);
  overlay(s.dipole_proj, top.dipole_proj);
  overlay(s.preset, top.preset);
  overlay(s.omega, top.omega);
  overlay(s.omega_prime, top.omega_prime);
  overlay(s.gamma_2p1s, top.gamma_2p1s);
  overlay(s.rabi, top.rabi);
  overlay(s.omega_0, top.omega_0);
  // omega_l and delta_l describe the same quantity; the later source wins.
  if (top.omega_l || top.delta_l) {
    s.omega_l = top.omega_l;
    s.delta_l = top.delta_l;
  }
  overlay(s.alpha_laser, top.alpha_laser);
  overlay(s.rwa, top.rwa);
  overlay(s.field_during_pulse, top.field_during_pulse);
  overlay(s.references, top.references);
  overlay(s.trajectory, top.trajectory);
  overlay(s.scan_delta_l, top.scan_delta_l);
  overlay(s.report, top.report);
  return s;
}

Resolved resolve(const Scenario& s) {
  Resolved r;
  if (!s.mode) throw config_error("no mode given (use a subcommand or a 'mode:' key)");
  r.mode = *s.mode;
  r.source = s.source;
  r.cutoff = s.cutoff.value_or(1e3);
  r.out_dir = s.out_dir.value_or(".");
  r.report = s.report.value_or("verify_report.json");

  const auto reject = [&](bool present, const char* what) {
    if (present) throw config_error(std::string("'") + what + "' does not apply to mode '" + r.mode + "'");
  };
  const bool ls = r.mode == "lineshape";
  const bool fl = r.mode == "fluorescence";
  const bool lamb = r.mode == "lamb-line";
  const bool pu = r.mode == "pulse";
  reject(s.gamma && !(ls || fl || pu), "gamma");
  reject(s.omega_eg && !(ls || fl), "omega_eg");
  reject((s.lamb_shift || s.suppress_lamb_shift || s.offshell_gamma) && !ls, "lamb_shift");
  reject((s.intensity || s.dipole_proj) && !(fl || lamb), "intensity");
  reject((s.preset || s.omega || s.omega_prime || s.gamma_2p1s) && !lamb, "preset");
  reject((s.rabi || s.omega_0 || s.omega_l || s.delta_l || s.alpha_laser || s.rwa ||
          s.field_during_pulse || s.references || s.trajectory || s.scan_delta_l) &&
             !pu,
         "pulse settings");

  if (r.mode == "verify") return r;

  r.reps = s.reps.value_or(std::vector<std::string>{"coulomb", "poincare", "symmetric"});
  if (r.reps.empty()) throw config_error("at least one representation is required");
  for (const auto& rep : r.reps) parse_gauge(rep);

  // Per-mode default grids.
  double gmin = 0.004, gmax = 2.4;
  int gpts = 600;
  if (fl) gmin = 0.2, gmax = 3.0, gpts = 561;
  if (lamb) gmin = 0.01, gmax = 4.0, gpts = 400;
  if (pu) gmin = 0.01, gmax = 3.0, gpts = 600;
  r.grid_min = s.grid.min.value_or(gmin);
  r.grid_max = s.grid.max.value_or(gmax);
  r.grid_points = s.grid.points.value_or(gpts);
  r.grid_log = s.grid.log.value_or(false);
  if (r.grid_points < 2) throw config_error("grid needs at least 2 points");
  if (!(r.grid_min < r.grid_max)) throw config_error("grid min must be below grid max");

  r.plot_format = s.plot.format.value_or("none");
  r.plot_log = s.plot.log_scale.value_or(false);
  r.title = s.plot.title.value_or("");

  r.gamma = s.gamma.value_or(0.1);
  r.omega_eg = s.omega_eg.value_or(1.0);
  if (s.suppress_lamb_shift.value_or(false)) {
    r.lamb_shift_auto = false;
    r.lamb_shift = 0.0;
  } else if (s.lamb_shift && *s.lamb_shift != "auto") {
    bool ok = false;
    r.lamb_shift_auto = false;
    r.lamb_shift = textconf::parse_number(*s.lamb_shift, &ok);
    if (!ok) throw config_error("lamb_shift expects a number or 'auto'");
  }
  r.offshell_gamma = s.offshell_gamma.value_or(false);

  r.intensity = s.intensity.value_or(1.0);
  r.dipole_proj = s.dipole_proj.value_or(1.0);

  if (lamb) {
    gl_lamb_line base{1.0, 1.0, 1e3, 0.6, 1.0, {GL_GAUGE_COULOMB, 0.0}};
    if (s.preset) {
      r.preset = *s.preset;
      check(gl_lamb_line_preset(s.preset->c_str(), &base));
    }
    r.intensity = s.intensity.value_or(base.intensity);
    r.dipole_proj = s.dipole_proj.value_or(base.dipole_proj);
    r.omega = s.omega.value_or(base.omega);
    r.omega_prime = s.omega_prime.value_or(base.omega_prime);
    r.gamma_2p1s = s.gamma_2p1s.value_or(base.gamma_2p1s);
  }

  r.rabi = s.rabi.value_or(1.0);
  r.omega_0 = s.omega_0.value_or(1.0);
  if (s.omega_l && s.delta_l) throw config_error("give either omega_l or delta_l, not both");
  r.omega_l = s.omega_l ? *s.omega_l : r.omega_0 - s.delta_l.value_or(0.0);
  r.alpha_laser = s.alpha_laser;
  r.rwa = s.rwa.value_or(true);
  r.field_during_pulse = s.field_during_pulse.value_or(false);
  r.references = s.references.value_or(false);
  r.trajectory = s.trajectory.value_or(true);
  r.scan_delta_l = s.scan_delta_l.value_or(std::vector<double>{});
  return r;
}

}  // namespace gaugeline::cli
