#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/repr.hpp"
#include "core/spectrum.hpp"

namespace gaugeline {

using Complex = std::complex<double>;

/// Coupling envelope Omega(t), nonzero on [start, end].
struct Envelope {
  double start = 0.0;
  double end = 0.0;
  std::function<double(double)> sample;
};

/// Rectangular pi-pulse on [-pi/rabi, 0].
Envelope rectangular_envelope(double rabi);

/// Semiclassical laser drive. A rabi of 0 means "no pulse".
struct PulseConfig {
  double rabi = 1.0;
  double omega_l = 1.0;
  /// Laser mixing weight; defaults to the representation's alpha at omega_l
  /// (0 Coulomb, 1 Poincare, 1/2 symmetric on resonance).
  std::optional<double> alpha_laser;
};

void validate(const PulseConfig& config);
Envelope envelope_of(const PulseConfig& config);

double laser_alpha(const PulseConfig& config, const GaugeRepresentation& rep, double omega_0);
/// u_l^{+-} for the laser at omega_l.
CouplingPair laser_coupling(const PulseConfig& config, const GaugeRepresentation& rep,
                            double omega_0);

struct DetuningSet {
  double delta_l;   // w0 - wl
  double delta_k;   // w0 - wk
  double delta_kl;  // wk - wl
  double mu;        // sqrt((rabi u_l^-)^2 + delta_l^2)
};

DetuningSet make_detunings(double omega_0, double omega_l, double omega_k, double rabi,
                           double u_l_minus);

/// Excited amplitude during the pulse (RWA, field decoupled), starting from
/// b_g = 1 at -pi/rabi:
///   b_e = (rabi u/mu) exp(i dl (t - pi/rabi)/2) sin(mu (t + pi/rabi)/2)
Complex excited_amplitude_during_pulse(double t, const PulseConfig& config,
                                       const GaugeRepresentation& rep, double omega_0);
/// Companion ground amplitude on the same window.
Complex ground_amplitude_during_pulse(double t, const PulseConfig& config,
                                      const GaugeRepresentation& rep, double omega_0);

/// Long-time mode amplitude b_k(inf) = -i g* u_k^- beta. The common factor
/// -i g* is left symbolic; the result carries u_k^- and beta.
struct ModeAmplitude {
  Complex beta;        // braced factor: lorentzian + laser
  Complex lorentzian;  // 1 / (i dk + gamma/2)
  Complex laser;       // pulse contribution
  double u_minus;      // u_k^-
  bool near_singular;  // evaluated through the series branch
};

ModeAmplitude closed_form_amplitude(double omega_k, const PulseConfig& config,
                                    const GaugeRepresentation& rep, double omega_0, double gamma);

/// Resonant-pulse form of the braced factor, as a function of dk only.
Complex resonant_closed_form_amplitude(double delta_k, double rabi, double gamma);

struct DynamicsOptions {
  bool rwa = true;
  /// Couple a discretized mode continuum to the atom throughout instead of
  /// using the exponential-decay ansatz after the pulse.
  bool include_field_during_pulse = false;
  double t_end = 0.0;          // 0: 55/gamma
  int pulse_samples = 201;     // trajectory samples on the pulse window
  int decay_samples = 200;     // trajectory samples after the pulse
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double fixed_step = 0.0;     // >0: classical RK4 with this step instead of adaptive
};

struct TrajectoryPoint {
  double t;
  Complex b_g;
  Complex b_e;
};

struct DynamicsResult {
  std::vector<TrajectoryPoint> trajectory;
  std::vector<double> mode_grid;
  /// Raw mode amplitudes at t_end.
  std::vector<Complex> mode_amplitudes;
  /// mode amplitude / (-i g u_k^-), comparable to ModeAmplitude::beta.
  std::vector<Complex> mode_beta;
  /// Largest deviation of the total norm from 1 over the samples.
  double max_norm_error = 0.0;
  double t_end = 0.0;
};

DynamicsResult integrate_dynamics(const PulseConfig& config, const GaugeRepresentation& rep,
                                  double omega_0, double gamma,
                                  const std::vector<double>& mode_grid,
                                  const DynamicsOptions& options = {});

enum class PulseSpectrumVariant {
  Full,               // numerator (gamma/2pi) |beta|^2
  LaserFree,          // numerator (gamma/2pi) |lorentzian|^2
  Lorentzian,         // (gamma/2pi) |lorentzian|^2, no numerator
  LorentzianLaser,    // (gamma/2pi) |beta|^2, no numerator
};

Spectrum pulse_spectrum(const PulseConfig& config, const GaugeRepresentation& rep, double omega_0,
                        double gamma, const std::vector<double>& grid,
                        PulseSpectrumVariant variant = PulseSpectrumVariant::Full);

struct SensitivityRow {
  std::string representation;
  double delta_l;
  double max_relative_deviation;  // against the same rep at delta_l = 0
};

std::vector<SensitivityRow> detuning_sensitivity_scan(const PulseConfig& base,
                                                      const std::vector<GaugeRepresentation>& reps,
                                                      const std::vector<double>& delta_l_list,
                                                      double omega_0, double gamma,
                                                      const std::vector<double>& grid);

}  // namespace gaugeline
