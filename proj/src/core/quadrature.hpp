#pragma once

#include <functional>

namespace gaugeline {

struct Quadrature {
  double value = 0.0;
  double error_estimate = 0.0;
};

inline constexpr int kDefaultQuadraturePoints = 4096;

/// Cauchy principal value  P Int_a^b f(x) / (x - pole) dx.
///
/// A pole outside [a, b] gives the ordinary integral. A pole sitting exactly
/// on an endpoint is a DomainError unless f vanishes there. `points` is the
/// total node budget; the error estimate is the difference to a run with
/// half the nodes.
Quadrature principal_value(const std::function<double(double)>& f, double a, double b, double pole,
                           int points = kDefaultQuadraturePoints);

/// Ordinary integral with panels graded geometrically away from `focus`
/// (the point where the integrand varies fastest).
Quadrature integrate_graded(const std::function<double(double)>& f, double a, double b,
                            double focus, int points = kDefaultQuadraturePoints);

}  // namespace gaugeline
