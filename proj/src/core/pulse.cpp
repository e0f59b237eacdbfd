#include "core/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "common/error.hpp"
#include "core/lineshape.hpp"

namespace gaugeline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

// Below this |denominator| / mu^2 the closed forms switch to their
// singularity-free series branches.
constexpr double kSingularFraction = 1e-2;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError(std::string(what) + " must be positive, got " + shortest_repr(value));
}

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

// Int_0^T exp(i x s) ds
Complex window_integral(double x, double T) {
  return T * std::exp(kI * (0.5 * x * T)) * sinc(0.5 * x * T);
}

}  // namespace

Envelope rectangular_envelope(double rabi) {
  require_positive(rabi, "rabi frequency");
  Envelope env;
  env.start = -kPi / rabi;
  env.end = 0.0;
  env.sample = [rabi, start = env.start](double t) {
    return (t >= start && t <= 0.0) ? rabi : 0.0;
  };
  return env;
}

void validate(const PulseConfig& config) {
  if (!(config.rabi >= 0.0) || !std::isfinite(config.rabi))
    throw DomainError("rabi frequency must be non-negative, got " + shortest_repr(config.rabi));
  require_positive(config.omega_l, "laser frequency");
  if (config.alpha_laser) {
    const double a = *config.alpha_laser;
    if (!std::isfinite(a) || a < 0.0 || a > 1.0)
      throw DomainError("laser alpha must lie in [0,1], got " + shortest_repr(a));
  }
}

Envelope envelope_of(const PulseConfig& config) {
  validate(config);
  if (config.rabi == 0.0) return Envelope{0.0, 0.0, [](double) { return 0.0; }};
  return rectangular_envelope(config.rabi);
}

double laser_alpha(const PulseConfig& config, const GaugeRepresentation& rep, double omega_0) {
  if (config.alpha_laser) return *config.alpha_laser;
  return alpha_k(rep, config.omega_l, omega_0);
}

CouplingPair laser_coupling(const PulseConfig& config, const GaugeRepresentation& rep,
                            double omega_0) {
  validate(config);
  if (!config.alpha_laser) return coupling_pair(rep, config.omega_l, omega_0);
  return coupling_pair_for_alpha(*config.alpha_laser, config.omega_l, omega_0);
}

DetuningSet make_detunings(double omega_0, double omega_l, double omega_k, double rabi,
                           double u_l_minus) {
  DetuningSet d;
  d.delta_l = omega_0 - omega_l;
  d.delta_k = omega_0 - omega_k;
  d.delta_kl = omega_k - omega_l;
  d.mu = std::hypot(rabi * u_l_minus, d.delta_l);
  return d;
}

Complex excited_amplitude_during_pulse(double t, const PulseConfig& config,
                                       const GaugeRepresentation& rep, double omega_0) {
  require_positive(config.rabi, "rabi frequency");
  require_positive(omega_0, "omega_0");
  const double T = kPi / config.rabi;
  if (!(t >= -T && t <= 0.0))
    throw DomainError("t = " + shortest_repr(t) + " lies outside the pulse window [" +
                      shortest_repr(-T) + ", 0]");
  const double u = laser_coupling(config, rep, omega_0).u_minus;
  const DetuningSet d = make_detunings(omega_0, config.omega_l, omega_0, config.rabi, u);
  return (config.rabi * u / d.mu) * std::exp(kI * (0.5 * d.delta_l * (t - T))) *
         std::sin(0.5 * d.mu * (t + T));
}

Complex ground_amplitude_during_pulse(double t, const PulseConfig& config,
                                      const GaugeRepresentation& rep, double omega_0) {
  require_positive(config.rabi, "rabi frequency");
  require_positive(omega_0, "omega_0");
  const double T = kPi / config.rabi;
  if (!(t >= -T && t <= 0.0))
    throw DomainError("t = " + shortest_repr(t) + " lies outside the pulse window");
  const double u = laser_coupling(config, rep, omega_0).u_minus;
  const DetuningSet d = make_detunings(omega_0, config.omega_l, omega_0, config.rabi, u);
  const double s = t + T;
  return std::exp(-kI * (0.5 * d.delta_l * s)) *
         (std::cos(0.5 * d.mu * s) + kI * (d.delta_l / d.mu) * std::sin(0.5 * d.mu * s));
}

ModeAmplitude closed_form_amplitude(double omega_k, const PulseConfig& config,
                                    const GaugeRepresentation& rep, double omega_0, double gamma) {
  require_positive(omega_k, "omega_k");
  require_positive(omega_0, "omega_0");
  require_positive(gamma, "gamma");
  validate(config);

  ModeAmplitude out{};
  out.u_minus = coupling_pair(rep, omega_k, omega_0).u_minus;
  const double delta_k = omega_0 - omega_k;
  out.lorentzian = 1.0 / Complex(0.5 * gamma, delta_k);
  if (config.rabi == 0.0) {
    out.beta = out.lorentzian;
    return out;
  }

  const double rabi = config.rabi;
  const double u = laser_coupling(config, rep, omega_0).u_minus;
  const DetuningSet d = make_detunings(omega_0, config.omega_l, omega_k, rabi, u);
  const double two_nu = 2.0 * d.delta_k - d.delta_l;
  const double denom = (rabi * u) * (rabi * u) + 4.0 * d.delta_k * d.delta_kl;

  if (std::abs(denom) >= kSingularFraction * d.mu * d.mu) {
    const double phase = kPi / (2.0 * rabi);
    const Complex bracket = std::exp(kI * (phase * two_nu)) - std::cos(phase * d.mu) -
                            kI * (two_nu / d.mu) * std::sin(phase * d.mu);
    out.laser = (2.0 * u * rabi / denom) * std::exp(-kI * (phase * d.delta_l)) * bracket;
  } else {
    // Same integral written with bounded kernels:
    //   (rabi u/mu) e^{i(dk-dl)T} Int_0^T e^{-i nu s} sin(mu s/2) ds
    const double T = kPi / rabi;
    const double nu = 0.5 * two_nu;
    const Complex J = (window_integral(0.5 * d.mu - nu, T) - window_integral(-0.5 * d.mu - nu, T)) /
                      (2.0 * kI);
    out.laser = (rabi * u / d.mu) * std::exp(kI * ((d.delta_k - d.delta_l) * T)) * J;
    out.near_singular = true;
  }
  out.beta = out.lorentzian + out.laser;
  return out;
}

Complex resonant_closed_form_amplitude(double delta_k, double rabi, double gamma) {
  require_positive(rabi, "rabi frequency");
  require_positive(gamma, "gamma");
  const Complex lorentz = 1.0 / Complex(0.5 * gamma, delta_k);
  const double denom = rabi * rabi - 4.0 * delta_k * delta_k;
  Complex laser;
  if (std::abs(denom) >= kSingularFraction * rabi * rabi) {
    laser = 2.0 / denom * (rabi * std::exp(kI * (kPi * delta_k / rabi)) - 2.0 * kI * delta_k);
  } else {
    const double sigma = delta_k > 0.0 ? 1.0 : -1.0;
    const double h = delta_k - 0.5 * sigma * rabi;
    const double x = kPi * h / rabi;
    const Complex f = kI * std::exp(kI * (0.5 * x)) * sinc(0.5 * x);  // (e^{ix} - 1)/x
    laser = -kI * (kPi * f - 2.0 * sigma) / (2.0 * (rabi + sigma * h));
  }
  return lorentz + laser;
}

// ---------------------------------------------------------------------------
// Amplitude ODE

namespace {

using State = std::vector<Complex>;
namespace odeint = boost::numeric::odeint;

struct Model {
  double omega_0;
  double omega_l;
  double gamma;
  CouplingPair ul;
  Envelope env;
  bool rwa;
  bool full_field;
  std::vector<double> delta;     // w0 - w_j per mode
  std::vector<double> coupling;  // G_j (full field only)
};

// Layout: x[0] = b_g, x[1] = b_e, x[2 + j] = mode j.
struct PulseSystem {
  const Model& m;
  void operator()(const State& x, State& dx, double t) const {
    const double rabi = m.env.sample(t);
    Complex to_e = 0.0, to_g = 0.0;
    if (m.rwa) {
      const Complex ph = std::exp(kI * ((m.omega_0 - m.omega_l) * t));
      to_e = 0.5 * rabi * m.ul.u_minus * ph;
      to_g = -0.5 * rabi * m.ul.u_minus * std::conj(ph);
    } else {
      const Complex e0 = std::exp(kI * (m.omega_0 * t));
      const Complex el = std::exp(kI * (m.omega_l * t));
      to_e = 0.5 * rabi * (m.ul.u_plus * el + m.ul.u_minus * std::conj(el)) * e0;
      to_g = -0.5 * rabi * (m.ul.u_plus * std::conj(el) + m.ul.u_minus * el) * std::conj(e0);
    }
    dx[0] = to_g * x[1];
    dx[1] = to_e * x[0];
    field(x, dx, t);
  }
  void field(const State& x, State& dx, double t) const {
    const std::size_t n = m.delta.size();
    for (std::size_t j = 0; j < n; ++j) {
      const Complex ph = std::exp(-kI * (m.delta[j] * t));
      if (m.full_field) {
        dx[2 + j] = -kI * m.coupling[j] * ph * x[1];
        dx[1] += -kI * m.coupling[j] * std::conj(ph) * x[2 + j];
      } else {
        dx[2 + j] = ph * x[1];
      }
    }
  }
};

struct DecaySystem {
  const Model& m;
  void operator()(const State& x, State& dx, double t) const {
    dx[0] = 0.0;
    dx[1] = m.full_field ? Complex(0.0) : Complex(-0.5 * m.gamma) * x[1];
    PulseSystem{m}.field(x, dx, t);
  }
};

std::vector<double> sample_times(double a, double b, int n) {
  std::vector<double> t(static_cast<std::size_t>(std::max(n, 2)));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a + (b - a) * i / (t.size() - 1.0);
  t.back() = b;
  return t;
}

template <class System, class Observer>
void run_segment(System sys, State& x, const std::vector<double>& times, const DynamicsOptions& opt,
                 Observer obs) {
  if (times.size() < 2 || !(times.back() > times.front())) return;
  const double span = times.back() - times.front();
  try {
    if (opt.fixed_step > 0.0) {
      odeint::runge_kutta4<State> stepper;
      odeint::integrate_times(stepper, sys, x, times.begin(), times.end(), opt.fixed_step, obs);
    } else {
      auto stepper = odeint::make_dense_output(opt.abs_tol, opt.rel_tol,
                                               odeint::runge_kutta_dopri5<State>());
      odeint::integrate_times(stepper, sys, x, times.begin(), times.end(), span * 1e-4, obs,
                              odeint::max_step_checker(2000000));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw IntegratorError(std::string("amplitude integration failed: ") + ex.what() +
                          " (segment [" + shortest_repr(times.front()) + ", " +
                          shortest_repr(times.back()) + "])");
  }
}

}  // namespace

DynamicsResult integrate_dynamics(const PulseConfig& config, const GaugeRepresentation& rep,
                                  double omega_0, double gamma, const std::vector<double>& mode_grid,
                                  const DynamicsOptions& options) {
  validate(config);
  require_positive(omega_0, "omega_0");
  require_positive(gamma, "gamma");
  if (options.fixed_step < 0.0 || !std::isfinite(options.fixed_step))
    throw ConfigError("fixed_step must be non-negative");
  for (double w : mode_grid) require_positive(w, "mode frequency");
  if (options.include_field_during_pulse && mode_grid.size() < 2)
    throw ConfigError("the discretized field needs at least two modes");

  Model m{omega_0, config.omega_l, gamma, laser_coupling(config, rep, omega_0),
          envelope_of(config), options.rwa, options.include_field_during_pulse, {}, {}};
  const std::size_t n = mode_grid.size();
  m.delta.resize(n);
  std::vector<double> u_k(n);
  for (std::size_t j = 0; j < n; ++j) {
    m.delta[j] = omega_0 - mode_grid[j];
    u_k[j] = coupling_pair(rep, mode_grid[j], omega_0).u_minus;
  }
  if (m.full_field) {
    // |g_j u_j|^2 = (gamma/2pi) numerator(w_j) dw_j reproduces the
    // golden-rule width in the continuum limit.
    m.coupling.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double left = j > 0 ? mode_grid[j] - mode_grid[j - 1] : 0.0;
      const double right = j + 1 < n ? mode_grid[j + 1] - mode_grid[j] : 0.0;
      const double dw = 0.5 * (left + right);
      m.coupling[j] = std::sqrt(gamma / (2.0 * kPi) * numerator(rep, mode_grid[j], omega_0) * dw);
    }
  }

  DynamicsResult result;
  result.mode_grid = mode_grid;
  result.t_end = options.t_end > 0.0 ? options.t_end : 55.0 / gamma;

  State x(2 + n, Complex(0.0));
  x[0] = 1.0;

  auto norm_of = [&](const State& s) {
    double total = std::norm(s[0]) + std::norm(s[1]);
    if (m.full_field)
      for (std::size_t j = 0; j < n; ++j) total += std::norm(s[2 + j]);
    return total;
  };
  auto check_finite = [](const State& s, double t) {
    for (const auto& c : s)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw IntegratorError("non-finite amplitude at t = " + shortest_repr(t));
  };
  bool track_norm = true;
  auto observer = [&](const State& s, double t) {
    check_finite(s, t);
    // The decay segment restarts at t = 0; keep the pulse-end sample.
    if (!result.trajectory.empty() && result.trajectory.back().t == t) return;
    result.trajectory.push_back({t, s[0], s[1]});
    if (track_norm) result.max_norm_error = std::max(result.max_norm_error, std::abs(norm_of(s) - 1.0));
  };

  if (config.rabi == 0.0) {
    // No drive: the atom never leaves |g;0>.
    for (double t : sample_times(0.0, result.t_end, options.decay_samples)) observer(x, t);
    result.mode_amplitudes.assign(n, Complex(0.0));
    result.mode_beta.assign(n, Complex(0.0));
    return result;
  }

  const double t0 = m.env.start;
  run_segment(PulseSystem{m}, x, sample_times(t0, 0.0, options.pulse_samples), options, observer);

  if (!m.full_field) {
    // Exponential-decay ansatz from the end of the pulse onwards.
    x[1] = 1.0;
    track_norm = false;
  }
  run_segment(DecaySystem{m}, x, sample_times(0.0, result.t_end, options.decay_samples), options,
              observer);

  result.mode_amplitudes.resize(n);
  result.mode_beta.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.full_field) {
      result.mode_amplitudes[j] = x[2 + j];
      result.mode_beta[j] = m.coupling[j] > 0.0 ? x[2 + j] / (-kI * m.coupling[j]) : Complex(0.0);
    } else {
      result.mode_beta[j] = x[2 + j];
      result.mode_amplitudes[j] = -kI * u_k[j] * x[2 + j];
    }
  }
  return result;
}

Spectrum pulse_spectrum(const PulseConfig& config, const GaugeRepresentation& rep, double omega_0,
                        double gamma, const std::vector<double>& grid, PulseSpectrumVariant variant) {
  validate(config);
  require_positive(omega_0, "omega_0");
  require_positive(gamma, "gamma");
  std::vector<double> values(grid.size());
  int singular_points = 0;
  LineshapeParams bare;
  bare.rep = rep;
  bare.omega_eg = omega_0;
  bare.gamma = gamma;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_positive(grid[i], "grid point");
    // Without a pulse the laser term is absent, so the full spectrum is the
    // laser-free one (sudden excitation).
    if (variant == PulseSpectrumVariant::LaserFree ||
        (variant == PulseSpectrumVariant::Full && config.rabi == 0.0)) {
      values[i] = lineshape_value(bare, grid[i]);
      continue;
    }
    const ModeAmplitude a = closed_form_amplitude(grid[i], config, rep, omega_0, gamma);
    if (a.near_singular) ++singular_points;
    switch (variant) {
      case PulseSpectrumVariant::Full:
        values[i] = numerator(rep, grid[i], omega_0) * (gamma / (2.0 * kPi)) * std::norm(a.beta);
        break;
      case PulseSpectrumVariant::Lorentzian:
        values[i] = (gamma / (2.0 * kPi)) * std::norm(a.lorentzian);
        break;
      case PulseSpectrumVariant::LorentzianLaser:
        values[i] = (gamma / (2.0 * kPi)) * std::norm(a.beta);
        break;
      case PulseSpectrumVariant::LaserFree:
        break;
    }
  }
  SpectrumMeta meta;
  switch (variant) {
    case PulseSpectrumVariant::Full:
    case PulseSpectrumVariant::LaserFree:
      meta.representation = rep.name();
      break;
    case PulseSpectrumVariant::Lorentzian:
      meta.representation = "lorentzian";
      break;
    case PulseSpectrumVariant::LorentzianLaser:
      meta.representation = "lorentzian+laser";
      break;
  }
  meta.gamma = gamma;
  meta.omega_eg = omega_0;
  meta.note = config.rabi == 0.0 ? "no pulse: sudden-excitation Lorentzian"
                                 : "pulse-excited emission spectrum";
  meta.params.emplace_back("rabi", shortest_repr(config.rabi));
  meta.params.emplace_back("omega_l", shortest_repr(config.omega_l));
  meta.params.emplace_back("alpha_laser", shortest_repr(laser_alpha(config, rep, omega_0)));
  if (singular_points > 0)
    meta.params.emplace_back("near_singular_points", std::to_string(singular_points));
  return Spectrum(grid, std::move(values), std::move(meta));
}

std::vector<SensitivityRow> detuning_sensitivity_scan(const PulseConfig& base,
                                                      const std::vector<GaugeRepresentation>& reps,
                                                      const std::vector<double>& delta_l_list,
                                                      double omega_0, double gamma,
                                                      const std::vector<double>& grid) {
  if (reps.empty() || delta_l_list.empty() || grid.empty())
    throw ConfigError("detuning scan needs representations, detunings and a grid");
  std::vector<SensitivityRow> rows;
  for (const auto& rep : reps) {
    PulseConfig ref = base;
    ref.omega_l = omega_0;
    const Spectrum reference = pulse_spectrum(ref, rep, omega_0, gamma, grid);
    for (double dl : delta_l_list) {
      PulseConfig cfg = base;
      cfg.omega_l = omega_0 - dl;
      const Spectrum s = pulse_spectrum(cfg, rep, omega_0, gamma, grid);
      double worst = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = reference.values()[i];
        const double dev = std::abs(s.values()[i] - r);
        worst = std::max(worst, r > 0.0 ? dev / r : dev);
      }
      rows.push_back({rep.name(), dl, worst});
    }
  }
  return rows;
}

}  // namespace gaugeline
