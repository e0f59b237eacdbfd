#include "core/lineshape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace gaugeline {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError(std::string(what) + " must be positive, got " + shortest_repr(value));
}

void require_cutoff(const AtomModel& model, double cutoff) {
  if (!std::isfinite(cutoff)) throw ConfigError("cutoff must be finite");
  const double top = max_transition_frequency(model);
  if (!(cutoff > top))
    throw ConfigError("cutoff " + shortest_repr(cutoff) +
                      " must exceed every transition frequency (largest is " + shortest_repr(top) +
                      ")");
}

// |d|^2 = e^2 |r|^2 for the pair (n, m).
double dipole2(const AtomModel& model, std::size_t n, std::size_t m) {
  return norm2(model.dipole(n, m));
}

}  // namespace

double max_transition_frequency(const AtomModel& model) {
  return model.levels().back().energy - model.levels().front().energy;
}

double numerator(const GaugeRepresentation& rep, double omega_k, double omega_eg) {
  require_positive(omega_k, "omega_k");
  require_positive(omega_eg, "omega_eg");
  const double x = omega_k / omega_eg;
  switch (rep.canonical_kind()) {
    case GaugeKind::Coulomb:
      return x;
    case GaugeKind::Poincare:
      return x * x * x;
    case GaugeKind::Symmetric:
      return 4.0 * x * x * x / ((1.0 + x) * (1.0 + x));
    case GaugeKind::CustomConstant:
      break;
  }
  return numerator_from_first_principles(rep, omega_k, omega_eg);
}

double numerator_from_first_principles(const GaugeRepresentation& rep, double omega_k,
                                       double omega_eg) {
  const CouplingPair u = coupling_pair(rep, omega_k, omega_eg);
  const double x = omega_k / omega_eg;
  return x * x * u.u_minus * u.u_minus;
}

double gamma_onshell(const AtomModel& model, std::string_view upper, std::string_view lower) {
  const std::size_t u = model.index_of(upper);
  const std::size_t l = model.index_of(lower);
  const double w = model.transition_frequency(u, l);
  if (!(w > 0.0))
    throw DomainError("gamma_onshell needs upper above lower ('" + std::string(upper) + "' -> '" +
                      std::string(lower) + "')");
  return w * w * w * dipole2(model, u, l) / (3.0 * kPi);
}

double channel_coupling(const AtomModel& model, std::size_t initial, std::size_t final_state,
                        const GaugeRepresentation& rep, double omega) {
  require_positive(omega, "photon frequency");
  if (initial == final_state) return 0.0;
  const double w_ni = model.transition_frequency(final_state, initial);
  const double e = model.charge();
  switch (rep.canonical_kind()) {
    case GaugeKind::Coulomb: {
      const double m = model.mass();
      const double p2 = norm2(model.momentum(final_state, initial));
      return e * e * p2 / (m * m) / (2.0 * omega);
    }
    case GaugeKind::Poincare:
      return 0.5 * omega * dipole2(model, final_state, initial);
    case GaugeKind::Symmetric: {
      if (w_ni > 0.0) return 0.0;  // counter-rotating coupling vanishes identically
      const double w = -w_ni;
      const double c = 2.0 * omega * w / (omega + w);
      return dipole2(model, final_state, initial) * c * c / (2.0 * omega);
    }
    case GaugeKind::CustomConstant: {
      const double a = rep.custom_alpha();
      const double c = (1.0 - a) * w_ni - a * omega;
      return dipole2(model, final_state, initial) * c * c / (2.0 * omega);
    }
  }
  return 0.0;
}

double gamma_onshell_via(const AtomModel& model, std::string_view upper, std::string_view lower,
                         const GaugeRepresentation& rep) {
  const std::size_t u = model.index_of(upper);
  const std::size_t l = model.index_of(lower);
  const double w = model.transition_frequency(u, l);
  if (!(w > 0.0)) throw DomainError("gamma_onshell needs upper above lower");
  return 2.0 / (3.0 * kPi) * w * w * channel_coupling(model, u, l, rep, w);
}

double gamma_offshell(double omega, const AtomModel& model, std::string_view initial,
                      const GaugeRepresentation& rep) {
  if (!std::isfinite(omega)) throw DomainError("energy argument must be finite");
  const std::size_t i = model.index_of(initial);
  double total = 0.0;
  for (std::size_t n = 0; n < model.size(); ++n) {
    if (n == i || !model.coupled(n, i)) continue;
    const double emitted = omega - model.level(n).energy;
    if (!(emitted > 0.0)) continue;
    const double w_in = model.transition_frequency(i, n);
    if (w_in > 0.0) {
      total += gamma_onshell(model, model.level(i).label, model.level(n).label) *
               numerator_from_first_principles(rep, emitted, w_in);
    } else {
      total += 2.0 / (3.0 * kPi) * emitted * emitted * channel_coupling(model, i, n, rep, emitted);
    }
  }
  return total;
}

Quadrature delta_offshell(double omega, const AtomModel& model, std::string_view initial,
                          const GaugeRepresentation& rep, double cutoff, int points) {
  require_cutoff(model, cutoff);
  if (!std::isfinite(omega)) throw DomainError("energy argument must be finite");
  const std::size_t i = model.index_of(initial);
  Quadrature total;
  for (std::size_t n = 0; n < model.size(); ++n) {
    if (n == i || !model.coupled(n, i)) continue;
    const double pole = omega - model.level(n).energy;
    // rho C / (pole - w') = -(rho C) / (w' - pole)
    auto f = [&](double w) {
      if (w == 0.0) return 0.0;
      return -w * w / (3.0 * kPi * kPi) * channel_coupling(model, i, n, rep, w);
    };
    const Quadrature q = principal_value(f, 0.0, cutoff, pole, points);
    total.value += q.value;
    total.error_estimate += q.error_estimate;
  }
  return total;
}

namespace {

struct ShiftPieces {
  double diag_over_omega = 0.0;  // coefficient of 1/w in the per-mode diagonal term
  double diag_constant = 0.0;    // w-independent part of the diagonal term
};

ShiftPieces diagonal_pieces(const AtomModel& model, std::size_t s, const GaugeRepresentation& rep) {
  const double e = model.charge();
  const double m = model.mass();
  double alpha = 0.0;
  switch (rep.canonical_kind()) {
    case GaugeKind::Coulomb:
    case GaugeKind::Symmetric:
      alpha = 0.0;
      break;
    case GaugeKind::Poincare:
      alpha = 1.0;
      break;
    case GaugeKind::CustomConstant:
      alpha = rep.custom_alpha();
      break;
  }
  ShiftPieces out;
  // e^2 A^2 / 2m: sum over polarizations of 1/(2w), weighted by the number
  // of directions the electron can move in (the angular measure
  // (8 pi/3) per direction is shared with the dipole terms).
  out.diag_over_omega = (1.0 - alpha) * (1.0 - alpha) * model.mobile_dimensions() * e * e / (4.0 * m);
  double d2 = 0.0;
  for (std::size_t n = 0; n < model.size(); ++n)
    if (n != s) d2 += dipole2(model, n, s);
  out.diag_constant = 0.5 * alpha * alpha * d2;
  return out;
}

// Second-order coupling numerator c_n(w) for the shift; the Symmetric
// representation is reported through the Coulomb route (its total shift is
// the same on-shell quantity).
const GaugeRepresentation& shift_route(const GaugeRepresentation& rep) {
  static const GaugeRepresentation coulomb = GaugeRepresentation::coulomb();
  return rep.canonical_kind() == GaugeKind::Symmetric ? coulomb : rep;
}

}  // namespace

std::vector<double> total_shift_mode_terms(const AtomModel& model, std::string_view state,
                                           const GaugeRepresentation& rep, double omega) {
  require_positive(omega, "mode frequency");
  const std::size_t s = model.index_of(state);
  const GaugeRepresentation& route = shift_route(rep);
  const double rho = omega * omega / (3.0 * kPi * kPi);
  const ShiftPieces diag = diagonal_pieces(model, s, route);
  std::vector<double> terms;
  terms.push_back(rho * (diag.diag_over_omega / omega + diag.diag_constant));
  for (std::size_t n = 0; n < model.size(); ++n) {
    if (n == s || !model.coupled(n, s)) continue;
    const double w_ns = model.transition_frequency(n, s);
    terms.push_back(-rho * channel_coupling(model, s, n, route, omega) / (w_ns + omega));
  }
  return terms;
}

double total_shift_mode(const AtomModel& model, std::string_view state,
                        const GaugeRepresentation& rep, double omega) {
  double sum = 0.0;
  for (double t : total_shift_mode_terms(model, state, rep, omega)) sum += t;
  return sum;
}

Quadrature total_shift(const AtomModel& model, std::string_view state,
                       const GaugeRepresentation& rep, double cutoff, int points) {
  require_cutoff(model, cutoff);
  const std::size_t s = model.index_of(state);
  const GaugeRepresentation& route = shift_route(rep);
  const ShiftPieces diag = diagonal_pieces(model, s, route);
  // Int_0^c w^2/(3pi^2) (A/w + B) dw
  Quadrature total;
  total.value = diag.diag_over_omega * cutoff * cutoff / (6.0 * kPi * kPi) +
                diag.diag_constant * cutoff * cutoff * cutoff / (9.0 * kPi * kPi);
  for (std::size_t n = 0; n < model.size(); ++n) {
    if (n == s || !model.coupled(n, s)) continue;
    const double w_ns = model.transition_frequency(n, s);
    auto f = [&](double w) {
      if (w == 0.0) return 0.0;
      return -w * w / (3.0 * kPi * kPi) * channel_coupling(model, s, n, route, w);
    };
    const Quadrature q = principal_value(f, 0.0, cutoff, -w_ns, points);
    total.value += q.value;
    total.error_estimate += q.error_estimate;
  }
  return total;
}

Quadrature lamb_shift(const AtomModel& model, std::string_view state, double cutoff, int points) {
  require_cutoff(model, cutoff);
  const std::size_t s = model.index_of(state);
  const double e = model.charge();
  const double m = model.mass();
  Quadrature total;
  for (std::size_t n = 0; n < model.size(); ++n) {
    if (n == s || !model.coupled(n, s)) continue;
    const double w_ns = model.transition_frequency(n, s);
    const double weight = e * e / (6.0 * kPi * kPi * m * m) * w_ns * norm2(model.momentum(n, s));
    const Quadrature q = principal_value([](double) { return 1.0; }, 0.0, cutoff, -w_ns, points);
    total.value += weight * q.value;
    total.error_estimate += std::abs(weight) * q.error_estimate;
  }
  return total;
}

void validate(const LineshapeParams& params) {
  require_positive(params.omega_eg, "omega_eg");
  require_positive(params.gamma, "gamma");
  if (!std::isfinite(params.lamb_shift)) throw DomainError("lamb_shift must be finite");
  if (!std::isfinite(params.cutoff)) throw DomainError("cutoff must be finite");
}

double lineshape_value(const LineshapeParams& params, double omega_k) {
  const double num = numerator(params.rep, omega_k, params.omega_eg);
  const double width = params.offshell_gamma ? params.gamma * num : params.gamma;
  const double detuning = omega_k - params.omega_eg - params.lamb_shift;
  return num * (params.gamma / (2.0 * kPi)) / (detuning * detuning + 0.25 * width * width);
}

Spectrum lineshape_S(const LineshapeParams& params, const std::vector<double>& grid) {
  validate(params);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_positive(grid[i], "grid point");
    values[i] = lineshape_value(params, grid[i]);
  }
  SpectrumMeta meta;
  meta.representation = params.rep.name();
  meta.gamma = params.gamma;
  meta.omega_eg = params.omega_eg;
  meta.lamb_shift = params.lamb_shift;
  meta.cutoff = params.cutoff;
  meta.note = "unnormalized spectral density; level shifts depend logarithmically on the cutoff";
  if (params.offshell_gamma) meta.params.emplace_back("offshell_gamma", "experimental");
  return Spectrum(grid, std::move(values), std::move(meta));
}

}  // namespace gaugeline
