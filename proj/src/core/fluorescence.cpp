#include "core/fluorescence.hpp"

#include <cmath>

#include "common/error.hpp"
#include "core/lineshape.hpp"

namespace gaugeline {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError(std::string(what) + " must be positive, got " + shortest_repr(value));
}

void require_nonnegative(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw DomainError(std::string(what) + " must be non-negative, got " + shortest_repr(value));
}

void validate(const SharpLineScenario& s) {
  require_nonnegative(s.intensity, "intensity");
  require_positive(s.omega_eg, "omega_eg");
  require_positive(s.gamma, "gamma");
  require_nonnegative(s.dipole_proj, "dipole_proj");
}

void validate(const LambLineScenario& s) {
  require_nonnegative(s.intensity, "intensity");
  require_positive(s.omega, "omega");
  require_positive(s.omega_prime, "omega_prime");
  require_positive(s.gamma_2p1s, "gamma_2p1s");
  require_nonnegative(s.dipole_proj, "dipole_proj");
}

}  // namespace

LambLineScenario lamb_line_preset(std::string_view name) {
  if (name == "lamb-hydrogen") {
    LambLineScenario s;
    s.omega = 1.0;
    s.omega_prime = 1e3;
    s.gamma_2p1s = 0.6;
    return s;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "' (known: lamb-hydrogen)");
}

double n_factor(const GaugeRepresentation& rep, double omega_0, double omega_eg) {
  require_positive(omega_0, "omega_0");
  require_positive(omega_eg, "omega_eg");
  const double x = omega_0 / omega_eg;
  switch (rep.canonical_kind()) {
    case GaugeKind::Coulomb:
      return omega_eg / omega_0;
    case GaugeKind::Poincare:
      return x * x * x;
    case GaugeKind::Symmetric: {
      const double s = omega_eg + omega_0;
      return 16.0 * omega_eg * omega_0 * omega_0 * omega_0 / (s * s * s * s);
    }
    case GaugeKind::CustomConstant:
      break;
  }
  return n_factor_from_first_principles(rep, omega_0, omega_eg);
}

double n_factor_from_first_principles(const GaugeRepresentation& rep, double omega_0,
                                      double omega_eg) {
  const double u = coupling_pair(rep, omega_0, omega_eg).u_minus;
  return omega_0 / omega_eg * (u * u) * (u * u);
}

double fluorescence_rate(const SharpLineScenario& s) {
  validate(s);
  const double n = n_factor(s.rep, s.omega_0, s.omega_eg);
  const double detuning = s.omega_0 - s.omega_eg;
  return s.intensity * s.gamma * s.dipole_proj * s.dipole_proj / 2.0 * n /
         (detuning * detuning + 0.25 * s.gamma * s.gamma);
}

Spectrum fluorescence_sweep(const SharpLineScenario& scenario, const std::vector<double>& grid) {
  validate(scenario);
  std::vector<double> values(grid.size()), n(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SharpLineScenario s = scenario;
    s.omega_0 = grid[i];
    values[i] = fluorescence_rate(s);
    n[i] = n_factor(s.rep, s.omega_0, s.omega_eg);
  }
  SpectrumMeta meta;
  meta.representation = scenario.rep.name();
  meta.gamma = scenario.gamma;
  meta.omega_eg = scenario.omega_eg;
  meta.note = "resonance-fluorescence rate versus incident frequency";
  Spectrum out(grid, std::move(values), std::move(meta));
  out.set_extra_column("n_factor", std::move(n));
  return out;
}

namespace {

// |<n|V|i; k lambda>|^2 for absorbing a photon of frequency w polarized
// along eps (box-normalization volume dropped).
double absorption_coupling(const AtomModel& model, std::size_t i, std::size_t n,
                           const GaugeRepresentation& rep, double w, const Vec3& eps) {
  const double w_ni = model.transition_frequency(n, i);
  const double d2 = std::norm(project(model.dipole(n, i), eps));
  switch (rep.canonical_kind()) {
    case GaugeKind::Coulomb: {
      const double e = model.charge();
      const double m = model.mass();
      const double p2 = std::norm(project(model.momentum(n, i), eps));
      return e * e * p2 / (m * m) / (2.0 * w);
    }
    case GaugeKind::Poincare:
      return 0.5 * w * d2;
    case GaugeKind::Symmetric: {
      const double c = 2.0 * w * w_ni / (w + w_ni);
      return d2 * c * c / (2.0 * w);
    }
    case GaugeKind::CustomConstant: {
      const double a = rep.custom_alpha();
      const double c = (1.0 - a) * w_ni + a * w;
      return d2 * c * c / (2.0 * w);
    }
  }
  return 0.0;
}

double onshell_width(const AtomModel& model, std::size_t n) {
  double total = 0.0;
  for (std::size_t l = 0; l < n; ++l)
    if (model.coupled(n, l)) total += gamma_onshell(model, model.level(n).label, model.level(l).label);
  return total;
}

Vec3 unit(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("polarization must be a non-zero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

double damped_rate_general(const AtomModel& model, std::string_view initial,
                           const GaugeRepresentation& rep, const std::vector<IncidentLine>& lines,
                           const Vec3& polarization) {
  if (lines.empty()) throw ConfigError("incident spectrum is empty");
  const Vec3 eps = unit(polarization);
  const std::size_t i = model.index_of(initial);
  double total = 0.0;
  for (const auto& line : lines) {
    require_positive(line.omega, "incident frequency");
    require_nonnegative(line.intensity, "incident intensity");
    if (line.intensity == 0.0) continue;
    for (std::size_t n = i + 1; n < model.size(); ++n) {
      if (!model.coupled(n, i)) continue;
      const double v2 = absorption_coupling(model, i, n, rep, line.omega, eps);
      if (v2 == 0.0) continue;
      const double gamma_w =
          gamma_offshell(model.level(i).energy + line.omega, model, model.level(n).label, rep);
      const double width = onshell_width(model, n);
      const double detuning = line.omega - model.transition_frequency(n, i);
      total += line.intensity * gamma_w / line.omega * v2 /
               (detuning * detuning + 0.25 * width * width);
    }
  }
  return total;
}

double damped_rate_general(const AtomModel& model, std::string_view initial,
                           const GaugeRepresentation& rep, const Spectrum& incident,
                           const Vec3& polarization) {
  const auto& g = incident.grid();
  const auto& v = incident.values();
  std::vector<IncidentLine> lines;
  if (g.size() == 1) {
    lines.push_back({g[0], v[0]});
  } else {
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double left = k > 0 ? g[k] - g[k - 1] : 0.0;
      const double right = k + 1 < g.size() ? g[k + 1] - g[k] : 0.0;
      lines.push_back({g[k], v[k] * 0.5 * (left + right)});
    }
  }
  return damped_rate_general(model, initial, rep, lines, polarization);
}

double lamb_n_factor(const GaugeRepresentation& rep, double omega_0, double omega,
                     double omega_prime) {
  require_positive(omega_0, "omega_0");
  require_positive(omega, "omega");
  require_positive(omega_prime, "omega_prime");
  const double emitted = omega + omega_prime - omega_0;
  if (!(emitted > 0.0))
    throw DomainError("emitted frequency w + w' - w0 must be positive, got " + shortest_repr(emitted));
  const double y = emitted / omega_prime;
  switch (rep.canonical_kind()) {
    case GaugeKind::Coulomb:
      return y * (omega * omega) / (omega_0 * omega_0);
    case GaugeKind::Poincare:
      return y * y * y;
    case GaugeKind::Symmetric: {
      const double a = omega + 2.0 * omega_prime - omega_0;
      const double b = omega + omega_0;
      return 4.0 * emitted * emitted * emitted / (omega_prime * a * a) * (4.0 * omega * omega / (b * b));
    }
    case GaugeKind::CustomConstant:
      break;
  }
  return lamb_n_factor_from_first_principles(rep, omega_0, omega, omega_prime);
}

double lamb_n_factor_from_first_principles(const GaugeRepresentation& rep, double omega_0,
                                           double omega, double omega_prime) {
  require_positive(omega_0, "omega_0");
  const double emitted = omega + omega_prime - omega_0;
  if (!(emitted > 0.0))
    throw DomainError("emitted frequency w + w' - w0 must be positive, got " + shortest_repr(emitted));
  const double u = coupling_pair(rep, omega_0, omega).u_minus;
  return numerator_from_first_principles(rep, emitted, omega_prime) * u * u * (omega / omega_0);
}

Spectrum lamb_rate_sweep(const LambLineScenario& s, const std::vector<double>& grid) {
  validate(s);
  std::vector<double> values(grid.size()), n(grid.size());
  const double prefactor = s.intensity * s.gamma_2p1s * s.dipole_proj * s.dipole_proj / 2.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    n[i] = lamb_n_factor(s.rep, grid[i], s.omega, s.omega_prime);
    const double detuning = grid[i] - s.omega;
    values[i] = prefactor * n[i] / (detuning * detuning + 0.25 * s.gamma_2p1s * s.gamma_2p1s);
  }
  SpectrumMeta meta;
  meta.representation = s.rep.name();
  meta.gamma = s.gamma_2p1s;
  meta.omega_eg = s.omega;
  meta.note = "stimulated-decay rate versus microwave frequency";
  meta.params.emplace_back("omega_prime", shortest_repr(s.omega_prime));
  meta.params.emplace_back("intensity", shortest_repr(s.intensity));
  meta.params.emplace_back("dipole_proj", shortest_repr(s.dipole_proj));
  Spectrum out(grid, std::move(values), std::move(meta));
  out.set_extra_column("n_factor", std::move(n));
  return out;
}

}  // namespace gaugeline
