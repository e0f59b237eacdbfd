#pragma once

#include <string_view>
#include <vector>

#include "core/atom.hpp"
#include "core/repr.hpp"
#include "core/spectrum.hpp"

namespace gaugeline {

struct SharpLineScenario {
  double intensity = 1.0;  // S
  double omega_0 = 1.0;    // incident frequency
  double omega_eg = 1.0;
  double gamma = 0.1;
  double dipole_proj = 1.0;  // |e . d_ge|
  GaugeRepresentation rep = GaugeRepresentation::coulomb();
};

struct LambLineScenario {
  double intensity = 1.0;
  double omega = 1.0;          // 2s -> 2p separation
  double omega_prime = 1e3;    // 2p -> 1s frequency
  double gamma_2p1s = 0.6;
  double dipole_proj = 1.0;    // |e . d_2s,2p|
  GaugeRepresentation rep = GaugeRepresentation::coulomb();
};

/// Named Lamb-line defaults. These are plot-legible placeholders, not
/// hydrogen values. Throws ConfigError for an unknown name.
LambLineScenario lamb_line_preset(std::string_view name);

/// Resonance-fluorescence numerator (closed forms for the named
/// representations, first principles for constant alpha).
double n_factor(const GaugeRepresentation& rep, double omega_0, double omega_eg);
/// (w0/weg) |u^-(w0)|^4
double n_factor_from_first_principles(const GaugeRepresentation& rep, double omega_0,
                                      double omega_eg);

double fluorescence_rate(const SharpLineScenario& scenario);

struct IncidentLine {
  double omega;
  double intensity;
};

/// Damped multi-channel rate out of `initial` driven by the given incident
/// lines polarized along `polarization`. Each excited level n contributes
/// S Gamma_n(w)/w |V_ni(w)|^2 / ((w - w_ni)^2 + Gamma_n^2/4), with the
/// off-shell Gamma_n(w) in the numerator and the on-shell total width of n
/// in the denominator.
double damped_rate_general(const AtomModel& model, std::string_view initial,
                           const GaugeRepresentation& rep, const std::vector<IncidentLine>& lines,
                           const Vec3& polarization);

/// Same, for a sampled spectral intensity; samples are weighted by the
/// trapezoid rule.
double damped_rate_general(const AtomModel& model, std::string_view initial,
                           const GaugeRepresentation& rep, const Spectrum& incident,
                           const Vec3& polarization);

double lamb_n_factor(const GaugeRepresentation& rep, double omega_0, double omega,
                     double omega_prime);
/// num(wk = w + w' - w0; w') |u^-(w0; w)|^2 (w/w0)
double lamb_n_factor_from_first_principles(const GaugeRepresentation& rep, double omega_0,
                                           double omega, double omega_prime);

/// gamma(w0) over the microwave grid; carries an "n_factor" column.
Spectrum lamb_rate_sweep(const LambLineScenario& scenario, const std::vector<double>& omega_0_grid);

/// Sweep of fluorescence_rate over incident frequency (scenario.omega_0 ignored).
Spectrum fluorescence_sweep(const SharpLineScenario& scenario, const std::vector<double>& omega_0_grid);

}  // namespace gaugeline
