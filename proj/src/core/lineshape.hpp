#pragma once

#include <string_view>
#include <vector>

#include "core/atom.hpp"
#include "core/quadrature.hpp"
#include "core/repr.hpp"
#include "core/spectrum.hpp"

namespace gaugeline {

/// Lineshape numerator normalized to 1 on shell (closed forms):
///   Coulomb x, Poincare x^3, symmetric 4x^3/(1+x)^2, with x = wk/weg.
/// Constant alpha uses the first-principles route.
double numerator(const GaugeRepresentation& rep, double omega_k, double omega_eg);

/// (wk/weg)^2 |u^-(wk)|^2: mode density times squared coupling, over its
/// on-shell value.
double numerator_from_first_principles(const GaugeRepresentation& rep, double omega_k,
                                       double omega_eg);

/// Golden-rule rate w^3 |d|^2 / (3 pi) for upper -> lower.
double gamma_onshell(const AtomModel& model, std::string_view upper, std::string_view lower);

/// Same rate evaluated through the representation's own coupling
/// (p-route for Coulomb, d-route for Poincare, mixed otherwise).
double gamma_onshell_via(const AtomModel& model, std::string_view upper, std::string_view lower,
                         const GaugeRepresentation& rep);

/// Squared angular-summed coupling C such that a channel i -> n with photon
/// w contributes (2/(3 pi)) w^2 C to the rate. Signed w_ni selects the
/// co-rotating (n below i) or counter-rotating (n above i) coupling.
double channel_coupling(const AtomModel& model, std::size_t initial, std::size_t final_state,
                        const GaugeRepresentation& rep, double omega);

/// Off-shell rate Gamma(w) of `initial` at total energy w: sum over channels
/// n with emitted frequency w - w_n > 0. Zero below every threshold.
double gamma_offshell(double omega, const AtomModel& model, std::string_view initial,
                      const GaugeRepresentation& rep);

/// Off-shell shift  P sum_n Int_0^cutoff dw' rho C_n(w') / (w - w_n - w').
Quadrature delta_offshell(double omega, const AtomModel& model, std::string_view initial,
                          const GaugeRepresentation& rep, double cutoff,
                          int points = kDefaultQuadraturePoints);

/// Per-mode contributions to the on-shell total shift at photon frequency w
/// (angular sum and w^2/(3 pi^2) mode density included). The first entry is
/// the diagonal (A^2 or polarization-squared) term; the rest are
/// second-order terms, one per coupled level.
std::vector<double> total_shift_mode_terms(const AtomModel& model, std::string_view state,
                                           const GaugeRepresentation& rep, double omega);

/// Sum of total_shift_mode_terms.
double total_shift_mode(const AtomModel& model, std::string_view state,
                        const GaugeRepresentation& rep, double omega);

/// Diagonal first-order term plus second-order shift, integrated to cutoff.
Quadrature total_shift(const AtomModel& model, std::string_view state,
                       const GaugeRepresentation& rep, double cutoff,
                       int points = kDefaultQuadraturePoints);

/// Mass-renormalized non-relativistic Lamb shift of `state`.
Quadrature lamb_shift(const AtomModel& model, std::string_view state, double cutoff,
                      int points = kDefaultQuadraturePoints);

struct LineshapeParams {
  GaugeRepresentation rep = GaugeRepresentation::coulomb();
  double omega_eg = 1.0;
  double gamma = 0.1;
  double lamb_shift = 0.0;
  /// Echoed into metadata only.
  double cutoff = 1e3;
  /// Experimental: use Gamma(w) = Gamma * numerator(w) in the denominator.
  bool offshell_gamma = false;
};

void validate(const LineshapeParams& params);

/// S(wk) = numerator * (Gamma/2pi) / ((wk - weg - dLS)^2 + Gamma^2/4).
double lineshape_value(const LineshapeParams& params, double omega_k);
Spectrum lineshape_S(const LineshapeParams& params, const std::vector<double>& grid);

/// Largest |w_n - w_m| in the model; cutoffs must exceed it.
double max_transition_frequency(const AtomModel& model);

}  // namespace gaugeline
