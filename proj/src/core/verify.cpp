#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "common/error.hpp"
#include "core/fluorescence.hpp"
#include "core/lineshape.hpp"
#include "core/pulse.hpp"
#include "core/spectrum.hpp"

namespace gaugeline {

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double rel(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<GaugeRepresentation> named_reps() {
  return {GaugeRepresentation::coulomb(), GaugeRepresentation::poincare(),
          GaugeRepresentation::symmetric(), GaugeRepresentation::custom(0.3)};
}

std::string cutoff_tag(double cutoff) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "cutoff_%.0f", cutoff);
  return buf;
}

}  // namespace

std::string status_of(const Check& c) {
  if (c.expected_failure) return c.passed ? "unexpected-pass" : "expected-fail";
  return c.passed ? "pass" : "FAIL";
}

Check make_check(std::string name, std::string description, double residual, double tolerance,
                 std::string anchor, bool expected_failure) {
  Check c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = residual <= tolerance;  // NaN never passes
  c.expected_failure = expected_failure;
  c.anchor = std::move(anchor);
  return c;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.expected_failure || c.passed; });
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

namespace {

nlohmann::json number_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw ParseError("report", 1, 1, "invalid number '" + s + "'");
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json root;
  root["ok"] = ok();
  auto& env = root["environment"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : environment) env[k] = v;
  auto& arr = root["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = status_of(c);
    j["residual"] = number_to_json(c.residual);
    j["tolerance"] = number_to_json(c.tolerance);
    j["passed"] = c.passed;
    j["expected_failure"] = c.expected_failure;
    j["description"] = c.description;
    j["anchor"] = c.anchor;
    arr.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  nlohmann::ordered_json root;
  try {
    root = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError("report", 1, static_cast<int>(ex.byte), ex.what());
  }
  VerificationReport r;
  try {
    for (const auto& [k, v] : root.at("environment").items())
      r.environment.emplace_back(k, v.get<std::string>());
    for (const auto& j : root.at("checks")) {
      Check c;
      c.name = j.at("name").get<std::string>();
      c.description = j.at("description").get<std::string>();
      c.residual = number_from_json(j.at("residual"));
      c.tolerance = number_from_json(j.at("tolerance"));
      c.passed = j.at("passed").get<bool>();
      c.expected_failure = j.at("expected_failure").get<bool>();
      c.anchor = j.at("anchor").get<std::string>();
      r.checks.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("report", 1, 1, std::string("malformed report: ") + ex.what());
  }
  return r;
}

std::string VerificationReport::to_table() const {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-15s  %-10s  %-10s\n", static_cast<int>(width), "check",
                "status", "residual", "tolerance");
  out += line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-*s  %-15s  %-10.3g  %-10.3g\n", static_cast<int>(width),
                  c.name.c_str(), status_of(c).c_str(), c.residual, c.tolerance);
    out += line;
  }
  return out;
}

// ---------------------------------------------------------------------------

Check check_gamma_invariance(const AtomModel& model, const std::string& upper,
                             const std::string& lower, const std::string& name) {
  const double reference = gamma_onshell(model, upper, lower);
  double lo = reference, hi = reference;
  for (const auto& rep : named_reps()) {
    const double g = gamma_onshell_via(model, upper, lower, rep);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  const double residual = hi == 0.0 ? 0.0 : (hi - lo) / hi;
  return make_check(name,
                    "spread of the on-shell decay rate " + upper + "->" + lower +
                        " across coulomb, poincare, symmetric, alpha:0.3",
                    residual, 1e-12, "on-shell golden-rule rate is representation independent");
}

namespace {

double mode_residual(const AtomModel& model, const std::string& state, double omega) {
  double c = 0.0, p = 0.0, scale = 0.0;
  for (double t : total_shift_mode_terms(model, state, GaugeRepresentation::coulomb(), omega)) {
    c += t;
    scale += std::abs(t);
  }
  for (double t : total_shift_mode_terms(model, state, GaugeRepresentation::poincare(), omega)) {
    p += t;
    scale += std::abs(t);
  }
  return scale == 0.0 ? std::abs(c - p) : std::abs(c - p) / scale;
}

double worst_mode_residual(const AtomModel& model, const std::string& state, double cutoff,
                           int points) {
  double worst = 0.0;
  for (double w : make_grid(cutoff * 1e-6, cutoff, points, GridScale::Log))
    worst = std::max(worst, mode_residual(model, state, w));
  return worst;
}

}  // namespace

std::vector<Check> check_total_shift_invariance(double cutoff, int grid_points) {
  std::vector<Check> out;
  const std::string tag = cutoff_tag(cutoff);
  const AtomModel osc = build_oscillator(1.0, 1.0, 6);
  out.push_back(make_check(
      "shift_invariance.oscillator." + tag,
      "per-mode Coulomb vs Poincare total shift of oscillator state 1, log grid up to the cutoff "
      "(residual relative to the summed term magnitudes)",
      worst_mode_residual(osc, "1", cutoff, grid_points), 1e-10,
      "A^2 term plus p-coupling equals polarization term plus d-coupling when the TRK sum holds"));

  const Quadrature c = total_shift(osc, "1", GaugeRepresentation::coulomb(), cutoff);
  const Quadrature p = total_shift(osc, "1", GaugeRepresentation::poincare(), cutoff);
  out.push_back(make_check("shift_invariance.oscillator_integrated." + tag,
                           "integrated total shift of oscillator state 1, Coulomb vs Poincare",
                           rel(c.value, p.value), 1e-10,
                           "total on-shell shift is the same for both gauges"));

  const AtomModel two = build_two_level(1.0, 1.0);
  out.push_back(make_check("shift_invariance.two_level." + tag,
                           "per-mode Coulomb vs Poincare total shift of the two-level excited "
                           "state; the TRK sum is violated so the gauges disagree",
                           worst_mode_residual(two, "e", cutoff, grid_points), 1e-10,
                           "invariance needs a complete set of intermediate states", true));

  const AtomModel zero = build_two_level(1.0, 0.0);
  // The Coulomb A^2 term is state independent and survives without a
  // dipole; every dipole-dependent contribution must vanish.
  double worst = 0.0;
  for (double w : make_grid(cutoff * 1e-6, cutoff, 64, GridScale::Log)) {
    const auto tc = total_shift_mode_terms(zero, "e", GaugeRepresentation::coulomb(), w);
    const auto tp = total_shift_mode_terms(zero, "e", GaugeRepresentation::poincare(), w);
    for (std::size_t i = 1; i < tc.size(); ++i) worst = std::max(worst, std::abs(tc[i]));
    for (std::size_t i = 1; i < tp.size(); ++i) worst = std::max(worst, std::abs(tp[i]));
    worst = std::max(worst, std::abs(tp[0]));
  }
  out.push_back(make_check("shift_invariance.zero_coupling." + tag,
                           "zero dipole: every dipole-dependent shift contribution vanishes", worst,
                           0.0, "no coupling, no shift"));
  return out;
}

std::vector<Check> check_table_consistency(int grid_points) {
  std::vector<Check> out;
  const auto grid = make_grid(0.05, 5.0, grid_points);
  const GaugeRepresentation three[] = {GaugeRepresentation::coulomb(), GaugeRepresentation::poincare(),
                                       GaugeRepresentation::symmetric()};
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  for (const auto& rep : three) {
    for (double x : grid) {
      t1 = std::max(t1, rel(numerator(rep, x, 1.0), numerator_from_first_principles(rep, x, 1.0)));
      t2 = std::max(t2, rel(n_factor(rep, x, 1.0), n_factor_from_first_principles(rep, x, 1.0)));
      // Lamb line: w = 1, w' = 10, microwave w0 on the grid.
      t3 = std::max(t3, rel(lamb_n_factor(rep, x, 1.0, 10.0),
                            lamb_n_factor_from_first_principles(rep, x, 1.0, 10.0)));
    }
  }
  out.push_back(make_check("lineshape_numerator.first_principles",
                           "lineshape numerator closed forms vs mode density times squared "
                           "coupling, wk in [0.05, 5] weg",
                           t1, 1e-12, "numerator = (wk/weg)^2 |u^-(wk)|^2"));
  out.push_back(make_check("fluorescence_numerator.first_principles",
                           "fluorescence numerator closed forms vs (w0/weg)|u^-(w0)|^4", t2, 1e-12,
                           "incoming and outgoing coupling both carry u^-"));
  out.push_back(make_check("lamb_numerator.first_principles",
                           "Lamb-line numerator closed forms vs emitted-photon numerator times "
                           "microwave coupling",
                           t3, 1e-12, "cascade numerator factorizes"));

  double u2 = 0.0, u3 = 0.0;
  for (const auto& rep : named_reps()) {
    for (double w : {0.5, 1.0, 3.0}) {
      u2 = std::max(u2, std::abs(n_factor(rep, w, w) - 1.0));
      u3 = std::max(u3, std::abs(lamb_n_factor(rep, w, w, 1000.0 * w) - 1.0));
    }
  }
  out.push_back(make_check("fluorescence_numerator.onshell_unity", "fluorescence numerator at w0 = weg", u2, 1e-12,
                           "on resonance every representation agrees"));
  out.push_back(make_check("lamb_numerator.onshell_unity", "Lamb-line numerator at w0 = w", u3, 1e-12,
                           "on resonance every representation agrees"));
  return out;
}

namespace {

Check ode_vs_closed_form(const std::string& name, double omega_0, double rabi, double gamma,
                         const std::vector<double>& modes) {
  PulseConfig cfg;
  cfg.rabi = rabi;
  cfg.omega_l = omega_0;
  const auto rep = GaugeRepresentation::symmetric();
  const DynamicsResult r = integrate_dynamics(cfg, rep, omega_0, gamma, modes);
  double worst = 0.0;
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const ModeAmplitude a = closed_form_amplitude(modes[j], cfg, rep, omega_0, gamma);
    worst = std::max(worst, std::abs(a.beta - r.mode_beta[j]) / std::abs(a.beta));
  }
  char desc[256];
  std::snprintf(desc, sizeof desc,
                "adaptive integration of the mode amplitudes vs the closed form, rabi=%g, "
                "gamma=%g, %zu modes over wk in [%g, %g]",
                rabi, gamma, modes.size(), modes.front(), modes.back());
  return make_check(name, desc, worst, 1e-6,
                    "time integral of the pulse solution plus exponential decay");
}

}  // namespace

std::vector<Check> check_ode_oracle(const PulseOracleParams& p) {
  std::vector<Check> out;
  const auto rep = GaugeRepresentation::symmetric();
  PulseConfig cfg;
  cfg.rabi = p.rabi;
  cfg.omega_l = p.omega_0;

  // Reduction of the general closed form to the resonant one, dense grid
  // that also hits the removable singularities exactly.
  double worst = 0.0;
  {
    std::vector<double> dks = make_grid(-5.0 * p.rabi, 5.0 * p.rabi, 1000);
    dks.push_back(0.5 * p.rabi);
    dks.push_back(-0.5 * p.rabi);
    for (double dk : dks) {
      const double wk = p.omega_0 - dk;
      if (!(wk > 0.0)) continue;
      const ModeAmplitude a = closed_form_amplitude(wk, cfg, rep, p.omega_0, p.gamma);
      worst = std::max(worst, rel(a.beta, resonant_closed_form_amplitude(dk, p.rabi, p.gamma)));
    }
  }
  out.push_back(make_check("pulse.general_to_resonant_reduction",
                           "general closed form at dl = 0 vs resonant closed form, 1000-point dk "
                           "grid plus dk = +-rabi/2",
                           worst, 1e-12, "resonant reduction of the emission amplitude"));

  // Modes with wk > 0 over dk in [-5 rabi, 5 rabi].
  const double lo = std::max(p.omega_0 - 5.0 * p.rabi, 0.05 * p.omega_0);
  const double hi = p.omega_0 + 5.0 * p.rabi;
  out.push_back(ode_vs_closed_form("pulse.ode_vs_closed_form", p.omega_0, p.rabi, p.gamma,
                                   make_grid(lo, hi, p.modes)));

  const DynamicsResult r = integrate_dynamics(cfg, rep, p.omega_0, p.gamma, {p.omega_0});
  double traj = 0.0, pi_err = 1.0;
  for (const auto& s : r.trajectory) {
    if (s.t > 0.0) break;
    traj = std::max(traj, std::abs(s.b_e - excited_amplitude_during_pulse(s.t, cfg, rep, p.omega_0)));
    traj = std::max(traj, std::abs(s.b_g - ground_amplitude_during_pulse(s.t, cfg, rep, p.omega_0)));
    if (s.t == 0.0) pi_err = std::abs(std::abs(s.b_e) - 1.0);
  }
  out.push_back(make_check("pulse.ode_vs_rabi_solution",
                           "integrated pulse-window amplitudes vs the analytic Rabi solution", traj,
                           1e-8, "rotating-wave two-level dynamics under a rectangular pulse"));
  out.push_back(make_check("pulse.pi_inversion", "| |b_e(0)| - 1 | after a resonant pi-pulse",
                           pi_err, 1e-9, "pi-pulse fully inverts the atom"));
  out.push_back(make_check("pulse.unitarity",
                           "max | |b_g|^2 + |b_e|^2 - 1 | over the pulse window (field decoupled)",
                           r.max_norm_error, 1e-9, "norm conservation without field coupling"));

  const auto grid = make_grid(0.05 * p.omega_0, 3.0 * p.omega_0, 400);
  PulseConfig off = cfg;
  off.rabi = 0.0;
  LineshapeParams bare;
  bare.rep = rep;
  bare.omega_eg = p.omega_0;
  bare.gamma = p.gamma;
  const Spectrum reference = lineshape_S(bare, grid);
  const Spectrum zero = pulse_spectrum(off, rep, p.omega_0, p.gamma, grid);
  const Spectrum free = pulse_spectrum(cfg, rep, p.omega_0, p.gamma, grid, PulseSpectrumVariant::LaserFree);
  double z = 0.0, f = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    z = std::max(z, rel(zero.values()[i], reference.values()[i]));
    f = std::max(f, std::abs(free.values()[i] - reference.values()[i]));
  }
  out.push_back(make_check("pulse.zero_rabi_lorentzian",
                           "rabi = 0 spectrum vs the laser-free lineshape", z, 0.0,
                           "without a pulse only the Lorentzian term survives"));
  out.push_back(make_check("pulse.laser_free_reduction",
                           "laser term dropped: spectrum vs lineshape, bitwise", f, 0.0,
                           "first term of the amplitude is the Lorentzian amplitude"));

  double ul = 0.0;
  for (const auto& r2 : named_reps())
    ul = std::max(ul, std::abs(laser_coupling(cfg, r2, p.omega_0).u_minus - 1.0));
  out.push_back(make_check("pulse.onshell_laser_coupling",
                           "u_l^- at wl = w0 for every representation", ul, 1e-15,
                           "resonant rotating-wave drive does not depend on alpha"));
  return out;
}

const std::vector<std::string>& required_check_names() {
  static const std::vector<std::string> names = {
      "fluorescence.asymmetry",
      "fluorescence.sharp_line_reduction",
      "fluorescence_numerator.first_principles",
      "fluorescence_numerator.onshell_unity",
      "gamma_invariance.oscillator",
      "gamma_invariance.two_level",
      "gamma_invariance.zero_dipole",
      "lamb_numerator.first_principles",
      "lamb_numerator.onshell_unity",
      "lamb_shift.log_scaling",
      "lineshape.gamma_offshell_numerator",
      "lineshape.interpolation",
      "lineshape_numerator.first_principles",
      "onshell_unity",
      "position_momentum.relation",
      "pulse.general_to_resonant_reduction",
      "pulse.laser_free_reduction",
      "pulse.ode_vs_closed_form",
      "pulse.ode_vs_closed_form.full_window",
      "pulse.ode_vs_rabi_solution",
      "pulse.onshell_laser_coupling",
      "pulse.pi_inversion",
      "pulse.unitarity",
      "pulse.zero_rabi_lorentzian",
      "repr.custom_endpoint_equivalence",
      "repr.symmetric_rwa_identity",
      "shift_invariance.oscillator.cutoff_100",
      "shift_invariance.oscillator.cutoff_1000",
      "shift_invariance.oscillator_integrated.cutoff_100",
      "shift_invariance.oscillator_integrated.cutoff_1000",
      "shift_invariance.two_level.cutoff_100",
      "shift_invariance.two_level.cutoff_1000",
      "shift_invariance.zero_coupling.cutoff_100",
      "shift_invariance.zero_coupling.cutoff_1000",
      "trk.oscillator",
  };
  return names;
}

std::vector<std::string> missing_checks(const VerificationReport& report) {
  std::vector<std::string> missing;
  for (const auto& name : required_check_names()) {
    const bool found = std::any_of(report.checks.begin(), report.checks.end(),
                                   [&](const Check& c) { return c.name == name; });
    if (!found) missing.push_back(name);
  }
  return missing;
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  auto add = [&](std::vector<Check> cs) {
    for (auto& c : cs) report.checks.push_back(std::move(c));
  };

  // --- representations
  {
    const auto grid = make_grid(1e-3, 1e3, 10000, GridScale::Log);
    double up = 0.0, mismatches = 0.0;
    const auto sym = GaugeRepresentation::symmetric();
    const std::pair<GaugeRepresentation, GaugeRepresentation> pairs[] = {
        {GaugeRepresentation::coulomb(), GaugeRepresentation::custom(0.0)},
        {GaugeRepresentation::poincare(), GaugeRepresentation::custom(1.0)}};
    for (double w : grid) {
      up = std::max(up, std::abs(coupling_pair(sym, w, 1.0).u_plus));
      for (const auto& [named, custom] : pairs) {
        const CouplingPair a = coupling_pair(named, w, 1.0);
        const CouplingPair b = coupling_pair(custom, w, 1.0);
        if (a.u_plus != b.u_plus || a.u_minus != b.u_minus) mismatches += 1;
        if (numerator(named, w, 1.0) != numerator(custom, w, 1.0)) mismatches += 1;
        if (n_factor(named, w, 1.0) != n_factor(custom, w, 1.0)) mismatches += 1;
      }
    }
    report.checks.push_back(make_check("repr.symmetric_rwa_identity",
                                       "max |u^+| of the symmetric representation, 10^4 log grid", up,
                                       0.0, "symmetric coupling has no counter-rotating part"));
    report.checks.push_back(make_check(
        "repr.custom_endpoint_equivalence",
        "count of non-identical values between alpha:0/coulomb and alpha:1/poincare", mismatches,
        0.0, "constant alpha endpoints are the two gauges"));
  }

  // --- atom
  {
    const AtomModel osc = build_oscillator(1.0, 1.0, 6);
    double trk = 0.0;
    for (int n = 1; n + 1 < 6; ++n)
      trk = std::max(trk, rel(trk_sum(osc, std::to_string(n), {1.0, 0.0, 0.0}), 0.5));
    report.checks.push_back(make_check("trk.oscillator",
                                       "TRK sum of interior oscillator states along the "
                                       "confinement axis vs 1/(2m)",
                                       trk, 1e-12, "oscillator strengths sum to one"));
    double pm = 0.0;
    for (const AtomModel& m : {osc, build_two_level(1.0, 1.0)}) {
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) {
          const CVec3 p = m.momentum(a, b);
          const CVec3 r = m.position(a, b);
          for (int k = 0; k < 3; ++k)
            pm = std::max(pm, std::abs(p[k] - Complex(0.0, m.mass() * m.transition_frequency(a, b)) * r[k]));
        }
    }
    report.checks.push_back(make_check("position_momentum.relation", "max |p_nm - i m w_nm r_nm|", pm, 1e-15,
                                       "momentum elements follow from position elements"));
  }

  // --- lineshape
  {
    report.checks.push_back(check_gamma_invariance(build_two_level(1.0, 1.0), "e", "g",
                                                   "gamma_invariance.two_level"));
    report.checks.push_back(check_gamma_invariance(build_oscillator(1.0, 1.0, 6), "1", "0",
                                                   "gamma_invariance.oscillator"));
    report.checks.push_back(check_gamma_invariance(build_two_level(1.0, 0.0), "e", "g",
                                                   "gamma_invariance.zero_dipole"));
    for (double cutoff : options.cutoffs) add(check_total_shift_invariance(cutoff, options.shift_grid_points));
    add(check_table_consistency(options.table_grid_points));

    double unity = 0.0;
    for (const auto& rep : named_reps()) {
      unity = std::max(unity, std::abs(numerator(rep, 1.0, 1.0) - 1.0));
      unity = std::max(unity, std::abs(n_factor(rep, 1.0, 1.0) - 1.0));
      unity = std::max(unity, std::abs(lamb_n_factor(rep, 1.0, 1.0, 1e3) - 1.0));
    }
    report.checks.push_back(make_check("onshell_unity",
                                       "lineshape, fluorescence and Lamb-line numerators on "
                                       "resonance for coulomb, poincare, symmetric, alpha:0.3",
                                       unity, 1e-12, "on-shell matrix elements are gauge invariant"));

    const AtomModel two = build_two_level(1.0, 1.0);
    const double g = gamma_onshell(two, "e", "g");
    double off = 0.0;
    for (const auto& rep : named_reps())
      for (double wk : make_grid(0.05, 5.0, 200))
        off = std::max(off, rel(gamma_offshell(wk, two, "e", rep), g * numerator(rep, wk, 1.0)));
    report.checks.push_back(make_check("lineshape.gamma_offshell_numerator",
                                       "two-level off-shell rate vs on-shell rate times numerator",
                                       off, 1e-12, "off-shell rate carries the lineshape numerator"));

    double interp = 0.0;  // count of violations
    for (double wk : make_grid(0.05, 5.0, 1000)) {
      if (wk == 1.0) continue;
      const double c = numerator(GaugeRepresentation::coulomb(), wk, 1.0);
      const double p = numerator(GaugeRepresentation::poincare(), wk, 1.0);
      const double s = numerator(GaugeRepresentation::symmetric(), wk, 1.0);
      if (!(s > std::min(c, p) && s < std::max(c, p))) interp += 1;
    }
    report.checks.push_back(make_check("lineshape.interpolation",
                                       "points where the symmetric numerator is not strictly "
                                       "between Coulomb and Poincare",
                                       interp, 0.0, "symmetric lineshape interpolates the gauges"));

    // Lamb shift: cutoff dependence per transition is ln|(w_ns + c)/w_ns|.
    const AtomModel osc = build_oscillator(1.0, 1.0, 6);
    const double d = lamb_shift(osc, "1", 1e4).value - lamb_shift(osc, "1", 1e3).value;
    double expected = 0.0;
    for (const char* n : {"0", "2"}) {
      const std::size_t a = osc.index_of(n), s = osc.index_of("1");
      const double w = osc.transition_frequency(a, s);
      const double weight = 1.0 / (6.0 * kPi * kPi) * w * norm2(osc.momentum(a, s));
      expected += weight * (std::log(std::abs((w + 1e4) / w)) - std::log(std::abs((w + 1e3) / w)));
    }
    report.checks.push_back(make_check("lamb_shift.log_scaling",
                                       "oscillator state 1: shift(10^4) - shift(10^3) vs the "
                                       "analytic logarithm",
                                       rel(d, expected), 1e-10,
                                       "Lamb shift grows logarithmically with the cutoff"));
  }

  // --- fluorescence
  {
    const AtomModel two = build_two_level(1.0, 1.0);
    const double g = gamma_onshell(two, "e", "g");
    double worst = 0.0;
    for (const auto& rep : named_reps())
      for (double w0 : {0.3, 0.9, 1.0, 1.2, 2.5}) {
        SharpLineScenario s;
        s.intensity = 2.0;
        s.omega_0 = w0;
        s.gamma = g;
        s.dipole_proj = 1.0;
        s.rep = rep;
        const double general = damped_rate_general(two, "g", rep, {{w0, 2.0}}, {0.0, 0.0, 1.0});
        worst = std::max(worst, rel(general, fluorescence_rate(s)));
      }
    report.checks.push_back(make_check("fluorescence.sharp_line_reduction",
                                       "damped multi-channel rate with one sharp line vs the "
                                       "closed-form fluorescence rate",
                                       worst, 1e-12, "sharp incident line reduces the damped rate"));

    double wrong = 0.0;
    for (double d : make_grid(0.01, 0.9, 100)) {
      SharpLineScenario s;
      s.gamma = 0.1;
      auto rate = [&](const GaugeRepresentation& rep, double w0) {
        s.rep = rep;
        s.omega_0 = w0;
        return fluorescence_rate(s);
      };
      const auto c = GaugeRepresentation::coulomb(), p = GaugeRepresentation::poincare();
      if (!(rate(c, 1.0 - d) > rate(c, 1.0 + d))) wrong += 1;
      if (!(rate(p, 1.0 + d) > rate(p, 1.0 - d))) wrong += 1;
    }
    report.checks.push_back(make_check("fluorescence.asymmetry",
                                       "points violating: Coulomb larger on the red side, "
                                       "Poincare larger on the blue side",
                                       wrong, 0.0, "numerators skew the resonance"));
  }

  // --- pulse
  {
    PulseOracleParams p;
    p.modes = options.ode_modes;
    add(check_ode_oracle(p));
    // Narrow-band pulse so that the whole dk window keeps wk > 0.
    const double rabi = 0.1, gamma = 0.01;
    report.checks.push_back(ode_vs_closed_form("pulse.ode_vs_closed_form.full_window", 1.0, rabi,
                                               gamma,
                                               make_grid(1.0 - 5.0 * rabi, 1.0 + 5.0 * rabi,
                                                         options.ode_modes)));
  }

  report.environment = {
      {"units", "hbar = c = eps0 = 1, e = 1, m = 1, omega_eg = 1"},
      {"cutoffs", [&] {
         std::string s;
         for (double c : options.cutoffs) s += (s.empty() ? "" : ",") + shortest_repr(c);
         return s;
       }()},
      {"quadrature_points", std::to_string(kDefaultQuadraturePoints)},
      {"table_grid_points", std::to_string(options.table_grid_points)},
      {"shift_grid_points", std::to_string(options.shift_grid_points)},
      {"ode_modes", std::to_string(options.ode_modes)},
      {"ode_tolerances", "rel 1e-10, abs 1e-12 (Dormand-Prince 5(4))"},
      {"pulse", "rabi=1, gamma=0.1 and rabi=0.1, gamma=0.01; omega_0=1, delta_l=0"},
  };
  report.sort();
  return report;
}

}  // namespace gaugeline
