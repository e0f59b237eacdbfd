#include "gaugeline/gaugeline.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "core/atom.hpp"
#include "core/fluorescence.hpp"
#include "core/lineshape.hpp"
#include "core/pulse.hpp"
#include "core/spectrum.hpp"
#include "core/verify.hpp"

struct gl_atom {
  gaugeline::AtomModel model;
};

struct gl_spectrum {
  gaugeline::Spectrum spectrum;
};

struct gl_trajectory {
  gaugeline::DynamicsResult result;
};

struct gl_report {
  gaugeline::VerificationReport report;
  std::vector<std::string> statuses;  // backing storage for gl_check_info::status
  void refresh() {
    statuses.clear();
    for (const auto& c : report.checks) statuses.push_back(gaugeline::status_of(c));
  }
};

namespace {

using namespace gaugeline;

thread_local std::string g_last_error;

gl_status fail(gl_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

gl_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain:
      return GL_ERR_DOMAIN;
    case ErrorKind::Config:
      return GL_ERR_CONFIG;
    case ErrorKind::Parse:
      return GL_ERR_PARSE;
    case ErrorKind::Integrator:
      return GL_ERR_INTEGRATOR;
    case ErrorKind::Io:
      return GL_ERR_IO;
  }
  return GL_ERR_INTERNAL;
}

template <class F>
gl_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return GL_OK;
  } catch (const Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GL_ERR_INTERNAL, "unknown error");
  }
}

struct NullArgument {};

template <class... P>
void need(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

// guard() catches std::exception only; NullArgument must escape it.
template <class F>
gl_status run(F&& f) {
  bool null_arg = false;
  const gl_status s = guard([&] {
    try {
      f();
    } catch (const NullArgument&) {
      null_arg = true;
    }
  });
  if (null_arg) return fail(GL_ERR_NULL, "required pointer argument is NULL");
  return s;
}

GaugeRepresentation to_rep(gl_gauge g) {
  switch (g.kind) {
    case GL_GAUGE_COULOMB:
      return GaugeRepresentation::coulomb();
    case GL_GAUGE_POINCARE:
      return GaugeRepresentation::poincare();
    case GL_GAUGE_SYMMETRIC:
      return GaugeRepresentation::symmetric();
    case GL_GAUGE_CUSTOM:
      return GaugeRepresentation::custom(g.alpha);
  }
  throw ConfigError("unknown gauge kind " + std::to_string(static_cast<int>(g.kind)));
}

gl_gauge from_rep(const GaugeRepresentation& r) {
  switch (r.kind()) {
    case GaugeKind::Coulomb:
      return {GL_GAUGE_COULOMB, 0.0};
    case GaugeKind::Poincare:
      return {GL_GAUGE_POINCARE, 1.0};
    case GaugeKind::Symmetric:
      return {GL_GAUGE_SYMMETRIC, 0.0};
    case GaugeKind::CustomConstant:
      return {GL_GAUGE_CUSTOM, r.custom_alpha()};
  }
  return {GL_GAUGE_COULOMB, 0.0};
}

gl_status copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
  const size_t n = s.size() + 1;
  if (needed) *needed = n;
  if (buf == nullptr && cap == 0) return GL_OK;
  if (buf == nullptr) return fail(GL_ERR_NULL, "output buffer is NULL");
  if (cap < n)
    return fail(GL_ERR_BUFFER, "buffer holds " + std::to_string(cap) + " bytes, " +
                                   std::to_string(n) + " needed");
  std::memcpy(buf, s.data(), n);
  return GL_OK;
}

gl_complex cx(Complex c) { return {c.real(), c.imag()}; }

std::vector<double> vec(const double* p, size_t n) {
  if (n > 0) need(p);
  return std::vector<double>(p, p + n);
}

PulseConfig to_pulse(const gl_pulse* p) {
  need(p);
  PulseConfig c;
  c.rabi = p->rabi;
  c.omega_l = p->omega_l;
  if (p->has_alpha_laser) c.alpha_laser = p->alpha_laser;
  return c;
}

SharpLineScenario to_sharp(const gl_sharp_line* s) {
  need(s);
  SharpLineScenario out;
  out.intensity = s->intensity;
  out.omega_0 = s->omega_0;
  out.omega_eg = s->omega_eg;
  out.gamma = s->gamma;
  out.dipole_proj = s->dipole_proj;
  out.rep = to_rep(s->gauge);
  return out;
}

LambLineScenario to_lamb(const gl_lamb_line* s) {
  need(s);
  LambLineScenario out;
  out.intensity = s->intensity;
  out.omega = s->omega;
  out.omega_prime = s->omega_prime;
  out.gamma_2p1s = s->gamma_2p1s;
  out.dipole_proj = s->dipole_proj;
  out.rep = to_rep(s->gauge);
  return out;
}

void put_vec(const CVec3& v, gl_complex out[3]) {
  for (int k = 0; k < 3; ++k) out[k] = cx(v[k]);
}

}  // namespace

extern "C" {

const char* gl_version(void) { return "1.0.0"; }

const char* gl_last_error(void) { return g_last_error.c_str(); }

const char* gl_status_name(gl_status status) {
  switch (status) {
    case GL_OK:
      return "ok";
    case GL_ERR_DOMAIN:
      return "domain error";
    case GL_ERR_CONFIG:
      return "configuration error";
    case GL_ERR_PARSE:
      return "parse error";
    case GL_ERR_INTEGRATOR:
      return "integrator failure";
    case GL_ERR_IO:
      return "i/o error";
    case GL_ERR_NULL:
      return "null argument";
    case GL_ERR_BUFFER:
      return "buffer too small";
    case GL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

// ---- representations

gl_status gl_gauge_parse(const char* text, gl_gauge* out) {
  return run([&] {
    need(text, out);
    *out = from_rep(GaugeRepresentation::parse(text));
  });
}

gl_status gl_gauge_name(gl_gauge gauge, char* buf, size_t cap, size_t* needed) {
  std::string s;
  const gl_status st = run([&] { s = to_rep(gauge).name(); });
  return st != GL_OK ? st : copy_out(s, buf, cap, needed);
}

gl_status gl_gauge_display_name(gl_gauge gauge, char* buf, size_t cap, size_t* needed) {
  std::string s;
  const gl_status st = run([&] { s = to_rep(gauge).display_name(); });
  return st != GL_OK ? st : copy_out(s, buf, cap, needed);
}

gl_status gl_alpha_k(gl_gauge gauge, double omega_k, double omega_0, double* out) {
  return run([&] {
    need(out);
    *out = alpha_k(to_rep(gauge), omega_k, omega_0);
  });
}

gl_status gl_coupling_pair(gl_gauge gauge, double omega_k, double omega_0, double* u_plus,
                           double* u_minus) {
  return run([&] {
    need(u_plus, u_minus);
    const CouplingPair p = coupling_pair(to_rep(gauge), omega_k, omega_0);
    *u_plus = p.u_plus;
    *u_minus = p.u_minus;
  });
}

// ---- atoms

gl_status gl_atom_two_level(double omega_eg, double d_eg, gl_atom** out) {
  return run([&] {
    need(out);
    *out = new gl_atom{build_two_level(omega_eg, d_eg)};
  });
}

gl_status gl_atom_oscillator(double omega, double mass, int n_levels, gl_atom** out) {
  return run([&] {
    need(out);
    *out = new gl_atom{build_oscillator(omega, mass, n_levels)};
  });
}

gl_status gl_atom_parse(const char* text, const char* source_name, gl_atom** out) {
  return run([&] {
    need(text, out);
    *out = new gl_atom{parse_atom(text, source_name ? source_name : "<atom>")};
  });
}

gl_status gl_atom_load(const char* path, gl_atom** out) {
  return run([&] {
    need(path, out);
    *out = new gl_atom{load_atom(path)};
  });
}

void gl_atom_free(gl_atom* atom) { delete atom; }

gl_status gl_atom_level_count(const gl_atom* atom, size_t* out) {
  return run([&] {
    need(atom, out);
    *out = atom->model.size();
  });
}

gl_status gl_atom_level(const gl_atom* atom, size_t index, const char** label, double* energy) {
  return run([&] {
    need(atom);
    if (index >= atom->model.size()) throw ConfigError("level index out of range");
    const Level& l = atom->model.level(index);
    if (label) *label = l.label.c_str();
    if (energy) *energy = l.energy;
  });
}

gl_status gl_atom_mass(const gl_atom* atom, double* mass, double* charge) {
  return run([&] {
    need(atom);
    if (mass) *mass = atom->model.mass();
    if (charge) *charge = atom->model.charge();
  });
}

gl_status gl_atom_dipole(const gl_atom* atom, const char* n, const char* m, gl_complex out[3]) {
  return run([&] {
    need(atom, n, m, out);
    put_vec(atom->model.dipole(atom->model.index_of(n), atom->model.index_of(m)), out);
  });
}

gl_status gl_atom_position(const gl_atom* atom, const char* n, const char* m, gl_complex out[3]) {
  return run([&] {
    need(atom, n, m, out);
    put_vec(atom->model.position(atom->model.index_of(n), atom->model.index_of(m)), out);
  });
}

gl_status gl_atom_momentum(const gl_atom* atom, const char* n, const char* m, gl_complex out[3]) {
  return run([&] {
    need(atom, n, m, out);
    put_vec(atom->model.momentum(atom->model.index_of(n), atom->model.index_of(m)), out);
  });
}

gl_status gl_trk_sum(const gl_atom* atom, const char* state, const double axis[3], double* out) {
  return run([&] {
    need(atom, state, axis, out);
    *out = trk_sum(atom->model, state, {axis[0], axis[1], axis[2]});
  });
}

// ---- lineshape

gl_status gl_numerator(gl_gauge gauge, double omega_k, double omega_eg, double* out) {
  return run([&] {
    need(out);
    *out = numerator(to_rep(gauge), omega_k, omega_eg);
  });
}

gl_status gl_numerator_first_principles(gl_gauge gauge, double omega_k, double omega_eg,
                                        double* out) {
  return run([&] {
    need(out);
    *out = numerator_from_first_principles(to_rep(gauge), omega_k, omega_eg);
  });
}

gl_status gl_gamma_onshell(const gl_atom* atom, const char* upper, const char* lower, double* out) {
  return run([&] {
    need(atom, upper, lower, out);
    *out = gamma_onshell(atom->model, upper, lower);
  });
}

gl_status gl_gamma_onshell_via(const gl_atom* atom, const char* upper, const char* lower,
                               gl_gauge gauge, double* out) {
  return run([&] {
    need(atom, upper, lower, out);
    *out = gamma_onshell_via(atom->model, upper, lower, to_rep(gauge));
  });
}

gl_status gl_gamma_offshell(double omega, const gl_atom* atom, const char* initial, gl_gauge gauge,
                            double* out) {
  return run([&] {
    need(atom, initial, out);
    *out = gamma_offshell(omega, atom->model, initial, to_rep(gauge));
  });
}

gl_status gl_delta_offshell(double omega, const gl_atom* atom, const char* initial, gl_gauge gauge,
                            double cutoff, double* value, double* error) {
  return run([&] {
    need(atom, initial, value);
    const Quadrature q = delta_offshell(omega, atom->model, initial, to_rep(gauge), cutoff);
    *value = q.value;
    if (error) *error = q.error_estimate;
  });
}

gl_status gl_total_shift(const gl_atom* atom, const char* state, gl_gauge gauge, double cutoff,
                         double* value, double* error) {
  return run([&] {
    need(atom, state, value);
    const Quadrature q = total_shift(atom->model, state, to_rep(gauge), cutoff);
    *value = q.value;
    if (error) *error = q.error_estimate;
  });
}

gl_status gl_total_shift_mode(const gl_atom* atom, const char* state, gl_gauge gauge, double omega,
                              double* out) {
  return run([&] {
    need(atom, state, out);
    *out = total_shift_mode(atom->model, state, to_rep(gauge), omega);
  });
}

gl_status gl_lamb_shift(const gl_atom* atom, const char* state, double cutoff, double* value,
                        double* error) {
  return run([&] {
    need(atom, state, value);
    const Quadrature q = lamb_shift(atom->model, state, cutoff);
    *value = q.value;
    if (error) *error = q.error_estimate;
  });
}

void gl_lineshape_params_default(gl_lineshape_params* params) {
  if (!params) return;
  params->gauge = {GL_GAUGE_COULOMB, 0.0};
  params->omega_eg = 1.0;
  params->gamma = 0.1;
  params->lamb_shift = 0.0;
  params->cutoff = 1e3;
  params->offshell_gamma = 0;
}

gl_status gl_lineshape(const gl_lineshape_params* params, const double* grid, size_t n,
                       gl_spectrum** out) {
  return run([&] {
    need(params, out);
    LineshapeParams p;
    p.rep = to_rep(params->gauge);
    p.omega_eg = params->omega_eg;
    p.gamma = params->gamma;
    p.lamb_shift = params->lamb_shift;
    p.cutoff = params->cutoff;
    p.offshell_gamma = params->offshell_gamma != 0;
    *out = new gl_spectrum{lineshape_S(p, vec(grid, n))};
  });
}

// ---- spectra

gl_status gl_make_grid(double min, double max, int points, int log, double* out, size_t cap) {
  std::vector<double> g;
  const gl_status st = run([&] {
    need(out);
    g = make_grid(min, max, points, log ? GridScale::Log : GridScale::Linear);
  });
  if (st != GL_OK) return st;
  if (cap < g.size())
    return fail(GL_ERR_BUFFER, "grid buffer holds " + std::to_string(cap) + " values, " +
                                   std::to_string(g.size()) + " needed");
  std::copy(g.begin(), g.end(), out);
  return GL_OK;
}

gl_status gl_spectrum_create(const double* grid, const double* values, size_t n,
                             const char* representation, gl_spectrum** out) {
  return run([&] {
    need(out);
    SpectrumMeta meta;
    meta.representation = representation ? representation : "";
    *out = new gl_spectrum{Spectrum(vec(grid, n), vec(values, n), meta)};
  });
}

void gl_spectrum_free(gl_spectrum* spectrum) { delete spectrum; }

size_t gl_spectrum_size(const gl_spectrum* s) { return s ? s->spectrum.size() : 0; }

const double* gl_spectrum_grid(const gl_spectrum* s) { return s ? s->spectrum.grid().data() : nullptr; }

const double* gl_spectrum_values(const gl_spectrum* s) {
  return s ? s->spectrum.values().data() : nullptr;
}

const char* gl_spectrum_representation(const gl_spectrum* s) {
  return s ? s->spectrum.meta().representation.c_str() : nullptr;
}

const char* gl_spectrum_note(const gl_spectrum* s) {
  return s ? s->spectrum.meta().note.c_str() : nullptr;
}

gl_status gl_spectrum_meta(const gl_spectrum* s, double* gamma, double* omega_eg,
                           double* lamb_shift, double* cutoff) {
  return run([&] {
    need(s);
    const SpectrumMeta& m = s->spectrum.meta();
    if (gamma) *gamma = m.gamma;
    if (omega_eg) *omega_eg = m.omega_eg;
    if (lamb_shift) *lamb_shift = m.lamb_shift;
    if (cutoff) *cutoff = m.cutoff;
  });
}

gl_status gl_spectrum_set_meta(gl_spectrum* s, double gamma, double omega_eg, double lamb_shift,
                               double cutoff) {
  return run([&] {
    need(s);
    SpectrumMeta& m = s->spectrum.meta();
    m.gamma = gamma;
    m.omega_eg = omega_eg;
    m.lamb_shift = lamb_shift;
    m.cutoff = cutoff;
  });
}

size_t gl_spectrum_param_count(const gl_spectrum* s) {
  return s ? s->spectrum.meta().params.size() : 0;
}

gl_status gl_spectrum_param(const gl_spectrum* s, size_t index, const char** key,
                            const char** value) {
  return run([&] {
    need(s, key, value);
    const auto& p = s->spectrum.meta().params;
    if (index >= p.size()) throw ConfigError("parameter index out of range");
    *key = p[index].first.c_str();
    *value = p[index].second.c_str();
  });
}

gl_status gl_spectrum_extra(const gl_spectrum* s, const char** name, const double** values) {
  return run([&] {
    need(s, name, values);
    const auto& extra = s->spectrum.extra_column();
    *name = extra ? extra->first.c_str() : nullptr;
    *values = extra ? extra->second.data() : nullptr;
  });
}

gl_status gl_spectrum_integral(const gl_spectrum* s, double* out) {
  return run([&] {
    need(s, out);
    *out = s->spectrum.integral();
  });
}

gl_status gl_spectrum_to_csv(const gl_spectrum* s, char* buf, size_t cap, size_t* needed) {
  std::string csv;
  const gl_status st = run([&] {
    need(s);
    csv = s->spectrum.to_csv();
  });
  return st != GL_OK ? st : copy_out(csv, buf, cap, needed);
}

// ---- fluorescence

gl_status gl_n_factor(gl_gauge gauge, double omega_0, double omega_eg, double* out) {
  return run([&] {
    need(out);
    *out = n_factor(to_rep(gauge), omega_0, omega_eg);
  });
}

gl_status gl_n_factor_first_principles(gl_gauge gauge, double omega_0, double omega_eg,
                                       double* out) {
  return run([&] {
    need(out);
    *out = n_factor_from_first_principles(to_rep(gauge), omega_0, omega_eg);
  });
}

gl_status gl_fluorescence_rate(const gl_sharp_line* scenario, double* out) {
  return run([&] {
    need(out);
    *out = fluorescence_rate(to_sharp(scenario));
  });
}

gl_status gl_fluorescence_sweep(const gl_sharp_line* scenario, const double* grid, size_t n,
                                gl_spectrum** out) {
  return run([&] {
    need(out);
    *out = new gl_spectrum{fluorescence_sweep(to_sharp(scenario), vec(grid, n))};
  });
}

gl_status gl_damped_rate_general(const gl_atom* atom, const char* initial, gl_gauge gauge,
                                 const double* omegas, const double* intensities, size_t n_lines,
                                 const double polarization[3], double* out) {
  return run([&] {
    need(atom, initial, polarization, out);
    std::vector<IncidentLine> lines;
    const auto w = vec(omegas, n_lines);
    const auto s = vec(intensities, n_lines);
    for (size_t i = 0; i < n_lines; ++i) lines.push_back({w[i], s[i]});
    *out = damped_rate_general(atom->model, initial, to_rep(gauge), lines,
                               {polarization[0], polarization[1], polarization[2]});
  });
}

gl_status gl_damped_rate_spectrum(const gl_atom* atom, const char* initial, gl_gauge gauge,
                                  const gl_spectrum* incident, const double polarization[3],
                                  double* out) {
  return run([&] {
    need(atom, initial, incident, polarization, out);
    *out = damped_rate_general(atom->model, initial, to_rep(gauge), incident->spectrum,
                               {polarization[0], polarization[1], polarization[2]});
  });
}

gl_status gl_lamb_n_factor(gl_gauge gauge, double omega_0, double omega, double omega_prime,
                           double* out) {
  return run([&] {
    need(out);
    *out = lamb_n_factor(to_rep(gauge), omega_0, omega, omega_prime);
  });
}

gl_status gl_lamb_n_factor_first_principles(gl_gauge gauge, double omega_0, double omega,
                                            double omega_prime, double* out) {
  return run([&] {
    need(out);
    *out = lamb_n_factor_from_first_principles(to_rep(gauge), omega_0, omega, omega_prime);
  });
}

gl_status gl_lamb_line_preset(const char* name, gl_lamb_line* out) {
  return run([&] {
    need(name, out);
    const LambLineScenario s = lamb_line_preset(name);
    out->intensity = s.intensity;
    out->omega = s.omega;
    out->omega_prime = s.omega_prime;
    out->gamma_2p1s = s.gamma_2p1s;
    out->dipole_proj = s.dipole_proj;
    out->gauge = from_rep(s.rep);
  });
}

gl_status gl_lamb_rate_sweep(const gl_lamb_line* scenario, const double* grid, size_t n,
                             gl_spectrum** out) {
  return run([&] {
    need(out);
    *out = new gl_spectrum{lamb_rate_sweep(to_lamb(scenario), vec(grid, n))};
  });
}

// ---- pulse

void gl_dynamics_options_default(gl_dynamics_options* o) {
  if (!o) return;
  const DynamicsOptions d;
  o->rwa = d.rwa ? 1 : 0;
  o->include_field_during_pulse = d.include_field_during_pulse ? 1 : 0;
  o->t_end = d.t_end;
  o->pulse_samples = d.pulse_samples;
  o->decay_samples = d.decay_samples;
  o->rel_tol = d.rel_tol;
  o->abs_tol = d.abs_tol;
  o->fixed_step = d.fixed_step;
}

gl_status gl_laser_coupling(const gl_pulse* pulse, gl_gauge gauge, double omega_0, double* u_plus,
                            double* u_minus, double* alpha) {
  return run([&] {
    const PulseConfig c = to_pulse(pulse);
    const GaugeRepresentation rep = to_rep(gauge);
    const CouplingPair p = laser_coupling(c, rep, omega_0);
    if (u_plus) *u_plus = p.u_plus;
    if (u_minus) *u_minus = p.u_minus;
    if (alpha) *alpha = laser_alpha(c, rep, omega_0);
  });
}

gl_status gl_excited_amplitude(double t, const gl_pulse* pulse, gl_gauge gauge, double omega_0,
                               gl_complex* out) {
  return run([&] {
    need(out);
    *out = cx(excited_amplitude_during_pulse(t, to_pulse(pulse), to_rep(gauge), omega_0));
  });
}

gl_status gl_ground_amplitude(double t, const gl_pulse* pulse, gl_gauge gauge, double omega_0,
                              gl_complex* out) {
  return run([&] {
    need(out);
    *out = cx(ground_amplitude_during_pulse(t, to_pulse(pulse), to_rep(gauge), omega_0));
  });
}

gl_status gl_closed_form_amplitude(double omega_k, const gl_pulse* pulse, gl_gauge gauge,
                                   double omega_0, double gamma, gl_complex* beta,
                                   double* u_minus) {
  return run([&] {
    need(beta);
    const ModeAmplitude a = closed_form_amplitude(omega_k, to_pulse(pulse), to_rep(gauge), omega_0, gamma);
    *beta = cx(a.beta);
    if (u_minus) *u_minus = a.u_minus;
  });
}

gl_status gl_resonant_amplitude(double delta_k, double rabi, double gamma, gl_complex* out) {
  return run([&] {
    need(out);
    *out = cx(resonant_closed_form_amplitude(delta_k, rabi, gamma));
  });
}

gl_status gl_integrate_dynamics(const gl_pulse* pulse, gl_gauge gauge, double omega_0, double gamma,
                                const double* mode_grid, size_t n_modes,
                                const gl_dynamics_options* options, gl_trajectory** out) {
  return run([&] {
    need(out);
    DynamicsOptions o;
    if (options) {
      o.rwa = options->rwa != 0;
      o.include_field_during_pulse = options->include_field_during_pulse != 0;
      o.t_end = options->t_end;
      o.pulse_samples = options->pulse_samples;
      o.decay_samples = options->decay_samples;
      o.rel_tol = options->rel_tol;
      o.abs_tol = options->abs_tol;
      o.fixed_step = options->fixed_step;
    }
    *out = new gl_trajectory{
        integrate_dynamics(to_pulse(pulse), to_rep(gauge), omega_0, gamma, vec(mode_grid, n_modes), o)};
  });
}

void gl_trajectory_free(gl_trajectory* trajectory) { delete trajectory; }

size_t gl_trajectory_size(const gl_trajectory* t) { return t ? t->result.trajectory.size() : 0; }

gl_status gl_trajectory_point(const gl_trajectory* tr, size_t index, double* t, gl_complex* b_g,
                              gl_complex* b_e) {
  return run([&] {
    need(tr);
    if (index >= tr->result.trajectory.size()) throw ConfigError("trajectory index out of range");
    const TrajectoryPoint& p = tr->result.trajectory[index];
    if (t) *t = p.t;
    if (b_g) *b_g = cx(p.b_g);
    if (b_e) *b_e = cx(p.b_e);
  });
}

size_t gl_trajectory_mode_count(const gl_trajectory* t) { return t ? t->result.mode_grid.size() : 0; }

gl_status gl_trajectory_mode(const gl_trajectory* tr, size_t index, double* omega_k,
                             gl_complex* amplitude, gl_complex* beta) {
  return run([&] {
    need(tr);
    if (index >= tr->result.mode_grid.size()) throw ConfigError("mode index out of range");
    if (omega_k) *omega_k = tr->result.mode_grid[index];
    if (amplitude) *amplitude = cx(tr->result.mode_amplitudes[index]);
    if (beta) *beta = cx(tr->result.mode_beta[index]);
  });
}

gl_status gl_trajectory_max_norm_error(const gl_trajectory* tr, double* out) {
  return run([&] {
    need(tr, out);
    *out = tr->result.max_norm_error;
  });
}

gl_status gl_trajectory_to_csv(const gl_trajectory* tr, char* buf, size_t cap, size_t* needed) {
  std::string csv;
  const gl_status st = run([&] {
    need(tr);
    csv = "t,re_bg0,im_bg0,re_be0,im_be0\n";
    for (const auto& p : tr->result.trajectory) {
      csv += format_g17(p.t) + "," + format_g17(p.b_g.real()) + "," + format_g17(p.b_g.imag()) +
             "," + format_g17(p.b_e.real()) + "," + format_g17(p.b_e.imag()) + "\n";
    }
  });
  return st != GL_OK ? st : copy_out(csv, buf, cap, needed);
}

gl_status gl_pulse_spectrum(const gl_pulse* pulse, gl_gauge gauge, double omega_0, double gamma,
                            const double* grid, size_t n, gl_pulse_variant variant,
                            gl_spectrum** out) {
  return run([&] {
    need(out);
    PulseSpectrumVariant v;
    switch (variant) {
      case GL_PULSE_FULL:
        v = PulseSpectrumVariant::Full;
        break;
      case GL_PULSE_LASER_FREE:
        v = PulseSpectrumVariant::LaserFree;
        break;
      case GL_PULSE_LORENTZIAN:
        v = PulseSpectrumVariant::Lorentzian;
        break;
      case GL_PULSE_LORENTZIAN_LASER:
        v = PulseSpectrumVariant::LorentzianLaser;
        break;
      default:
        throw ConfigError("unknown pulse spectrum variant");
    }
    *out = new gl_spectrum{pulse_spectrum(to_pulse(pulse), to_rep(gauge), omega_0, gamma, vec(grid, n), v)};
  });
}

gl_status gl_pulse_detuning_scan(const gl_pulse* base, const gl_gauge* gauges, size_t n_gauges,
                                 const double* delta_l, size_t n_delta, double omega_0,
                                 double gamma, const double* grid, size_t n, double* out) {
  return run([&] {
    need(gauges, delta_l, out);
    std::vector<GaugeRepresentation> reps;
    for (size_t i = 0; i < n_gauges; ++i) reps.push_back(to_rep(gauges[i]));
    const auto rows = detuning_sensitivity_scan(to_pulse(base), reps, vec(delta_l, n_delta), omega_0,
                                                gamma, vec(grid, n));
    for (size_t i = 0; i < rows.size(); ++i) out[i] = rows[i].max_relative_deviation;
  });
}

// ---- verification

gl_status gl_verify_run(gl_report** out) {
  return run([&] {
    need(out);
    auto r = std::make_unique<gl_report>();
    r->report = run_verification();
    r->refresh();
    *out = r.release();
  });
}

gl_status gl_report_from_json(const char* text, gl_report** out) {
  return run([&] {
    need(text, out);
    auto r = std::make_unique<gl_report>();
    r->report = VerificationReport::from_json(text);
    r->refresh();
    *out = r.release();
  });
}

void gl_report_free(gl_report* report) { delete report; }

int gl_report_ok(const gl_report* r) { return r && r->report.ok() ? 1 : 0; }

size_t gl_report_check_count(const gl_report* r) { return r ? r->report.checks.size() : 0; }

gl_status gl_report_check(const gl_report* r, size_t index, gl_check_info* out) {
  return run([&] {
    need(r, out);
    if (index >= r->report.checks.size()) throw ConfigError("check index out of range");
    const Check& c = r->report.checks[index];
    out->name = c.name.c_str();
    out->status = r->statuses[index].c_str();
    out->description = c.description.c_str();
    out->anchor = c.anchor.c_str();
    out->residual = c.residual;
    out->tolerance = c.tolerance;
    out->passed = c.passed ? 1 : 0;
    out->expected_failure = c.expected_failure ? 1 : 0;
  });
}

gl_status gl_report_remove_check(gl_report* r, const char* name) {
  return run([&] {
    need(r, name);
    auto& checks = r->report.checks;
    const auto it = std::find_if(checks.begin(), checks.end(),
                                 [&](const Check& c) { return c.name == name; });
    if (it == checks.end()) throw ConfigError(std::string("no check named '") + name + "'");
    checks.erase(it);
    r->refresh();
  });
}

size_t gl_report_missing_count(const gl_report* r) {
  return r ? missing_checks(r->report).size() : 0;
}

gl_status gl_report_to_json(const gl_report* r, char* buf, size_t cap, size_t* needed) {
  std::string s;
  const gl_status st = run([&] {
    need(r);
    s = r->report.to_json();
  });
  return st != GL_OK ? st : copy_out(s, buf, cap, needed);
}

gl_status gl_report_to_table(const gl_report* r, char* buf, size_t cap, size_t* needed) {
  std::string s;
  const gl_status st = run([&] {
    need(r);
    s = r->report.to_table();
  });
  return st != GL_OK ? st : copy_out(s, buf, cap, needed);
}

}  // extern "C"
