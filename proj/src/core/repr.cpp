#include "core/repr.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "common/error.hpp"

namespace gaugeline {

namespace {

void require_positive(double omega_k, double omega_0) {
  if (!(omega_k > 0.0) || !std::isfinite(omega_k))
    throw DomainError("photon frequency must be positive and finite, got " + shortest_repr(omega_k));
  if (!(omega_0 > 0.0) || !std::isfinite(omega_0))
    throw DomainError("transition frequency must be positive and finite, got " +
                      shortest_repr(omega_0));
}

}  // namespace

std::string shortest_repr(double value) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

GaugeRepresentation GaugeRepresentation::custom(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
    throw DomainError("custom alpha must lie in [0,1], got " + shortest_repr(alpha));
  return GaugeRepresentation(GaugeKind::CustomConstant, alpha);
}

GaugeRepresentation GaugeRepresentation::parse(std::string_view text) {
  if (text == "coulomb") return coulomb();
  if (text == "poincare") return poincare();
  if (text == "symmetric") return symmetric();
  constexpr std::string_view prefix = "alpha:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string number(text.substr(prefix.size()));
    char* end = nullptr;
    const double alpha = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size())
      throw ConfigError("malformed representation '" + std::string(text) + "'");
    return custom(alpha);
  }
  throw ConfigError("unknown representation '" + std::string(text) +
                    "' (expected coulomb, poincare, symmetric or alpha:<value>)");
}

GaugeKind GaugeRepresentation::canonical_kind() const noexcept {
  if (kind_ == GaugeKind::CustomConstant) {
    if (alpha_ == 0.0) return GaugeKind::Coulomb;
    if (alpha_ == 1.0) return GaugeKind::Poincare;
  }
  return kind_;
}

std::string GaugeRepresentation::name() const {
  switch (kind_) {
    case GaugeKind::Coulomb: return "coulomb";
    case GaugeKind::Poincare: return "poincare";
    case GaugeKind::Symmetric: return "symmetric";
    case GaugeKind::CustomConstant: return "alpha:" + shortest_repr(alpha_);
  }
  return {};
}

std::string GaugeRepresentation::display_name() const {
  switch (kind_) {
    case GaugeKind::Coulomb: return "Coulomb";
    case GaugeKind::Poincare: return "Poincaré";
    case GaugeKind::Symmetric: return "symmetric";
    case GaugeKind::CustomConstant: return "α = " + shortest_repr(alpha_);
  }
  return {};
}

double alpha_k(const GaugeRepresentation& rep, double omega_k, double omega_0) {
  require_positive(omega_k, omega_0);
  switch (rep.kind()) {
    case GaugeKind::Coulomb: return 0.0;
    case GaugeKind::Poincare: return 1.0;
    case GaugeKind::Symmetric: return omega_0 / (omega_k + omega_0);
    case GaugeKind::CustomConstant: return rep.custom_alpha();
  }
  return 0.0;
}

CouplingPair coupling_pair_for_alpha(double alpha, double omega_k, double omega_0) {
  require_positive(omega_k, omega_0);
  const double down = std::sqrt(omega_0 / omega_k);
  const double up = std::sqrt(omega_k / omega_0);
  return {(1.0 - alpha) * down - alpha * up, (1.0 - alpha) * down + alpha * up};
}

CouplingPair coupling_pair(const GaugeRepresentation& rep, double omega_k, double omega_0) {
  if (rep.kind() == GaugeKind::Symmetric) {
    require_positive(omega_k, omega_0);
    // (1-a)sqrt(w0/wk) and a*sqrt(wk/w0) are both sqrt(w0 wk)/(wk+w0) here.
    return {0.0, 2.0 * std::sqrt(omega_0 * omega_k) / (omega_k + omega_0)};
  }
  return coupling_pair_for_alpha(alpha_k(rep, omega_k, omega_0), omega_k, omega_0);
}

}  // namespace gaugeline
