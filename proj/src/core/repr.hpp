#pragma once

// One-parameter family of electric-dipole couplings.
//
// A representation is fixed by the mixing weight alpha_k in [0,1]:
//   u_k^{+-} = (1 - alpha_k) sqrt(w0/wk) -+ alpha_k sqrt(wk/w0)
// alpha = 0 is the Coulomb gauge (p.A coupling), alpha = 1 the Poincare
// (multipolar, d.E) gauge, and alpha_k = w0/(wk+w0) the symmetric
// representation, for which the counter-rotating coupling u^+ vanishes.
//
// Natural units throughout (hbar = c = eps0 = 1).

#include <string>
#include <string_view>

namespace gaugeline {

enum class GaugeKind { Coulomb, Poincare, Symmetric, CustomConstant };

class GaugeRepresentation {
 public:
  static GaugeRepresentation coulomb() { return GaugeRepresentation(GaugeKind::Coulomb, 0.0); }
  static GaugeRepresentation poincare() { return GaugeRepresentation(GaugeKind::Poincare, 1.0); }
  static GaugeRepresentation symmetric() { return GaugeRepresentation(GaugeKind::Symmetric, 0.0); }
  /// Frequency-independent alpha; throws DomainError unless finite and in [0,1].
  static GaugeRepresentation custom(double alpha);

  /// Accepts "coulomb" | "poincare" | "symmetric" | "alpha:<float>".
  static GaugeRepresentation parse(std::string_view text);

  GaugeKind kind() const noexcept { return kind_; }
  double custom_alpha() const noexcept { return alpha_; }

  /// Kind used for dispatch: alpha:0 behaves as Coulomb and alpha:1 as
  /// Poincare in every operation, so these pairs give identical results.
  GaugeKind canonical_kind() const noexcept;

  /// Round-trips through parse().
  std::string name() const;
  /// Human-readable label for plot legends.
  std::string display_name() const;

  friend bool operator==(const GaugeRepresentation&, const GaugeRepresentation&) = default;

 private:
  GaugeRepresentation(GaugeKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  GaugeKind kind_;
  double alpha_;
};

struct CouplingPair {
  double u_plus;
  double u_minus;
};

/// Mixing weight for a photon of frequency omega_k on a transition omega_0.
double alpha_k(const GaugeRepresentation& rep, double omega_k, double omega_0);

CouplingPair coupling_pair(const GaugeRepresentation& rep, double omega_k, double omega_0);

/// u^{+-} for an explicit constant alpha (used for the laser coupling).
CouplingPair coupling_pair_for_alpha(double alpha, double omega_k, double omega_0);

/// Shortest decimal form of `value` that parses back to the same double.
std::string shortest_repr(double value);

}  // namespace gaugeline
