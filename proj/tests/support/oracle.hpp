#pragma once

// Reference formulas written directly from their definitions, independent
// of the library's implementation.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

inline double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline double rel(std::complex<double> a, std::complex<double> b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Mixing weight: 0 Coulomb, 1 Poincare, w0/(wk+w0) symmetric.
inline double u_minus(double alpha, double wk, double w0) {
  return (1.0 - alpha) * std::sqrt(w0 / wk) + alpha * std::sqrt(wk / w0);
}
inline double u_plus(double alpha, double wk, double w0) {
  return (1.0 - alpha) * std::sqrt(w0 / wk) - alpha * std::sqrt(wk / w0);
}
inline double symmetric_alpha(double wk, double w0) { return w0 / (wk + w0); }

// Lineshape numerators, x = wk/weg.
inline double num_coulomb(double x) { return x; }
inline double num_poincare(double x) { return x * x * x; }
inline double num_symmetric(double x) { return 4.0 * x * x * x / ((1.0 + x) * (1.0 + x)); }

// Resonance-fluorescence factors.
inline double n_coulomb(double w0, double weg) { return weg / w0; }
inline double n_poincare(double w0, double weg) { return std::pow(w0 / weg, 3); }
inline double n_symmetric(double w0, double weg) {
  return 16.0 * weg * w0 * w0 * w0 / std::pow(weg + w0, 4);
}

// Lamb-line factors.
inline double lamb_coulomb(double w0, double w, double wp) {
  return ((w + wp - w0) / wp) * (w * w / (w0 * w0));
}
inline double lamb_poincare(double w0, double w, double wp) { return std::pow((w + wp - w0) / wp, 3); }
inline double lamb_symmetric(double w0, double w, double wp) {
  const double e = w + wp - w0;
  return (4.0 * e * e * e / (wp * std::pow(w + 2.0 * wp - w0, 2))) * (4.0 * w * w / std::pow(w + w0, 2));
}

inline double lorentzian(double dw, double gamma) {
  return (gamma / (2.0 * kPi)) / (dw * dw + gamma * gamma / 4.0);
}

inline double golden_rule(double w, double d2) { return w * w * w * d2 / (3.0 * kPi); }

// Composite Simpson rule with n (even) panels.
template <class F>
auto simpson(F f, double a, double b, int n) -> decltype(f(a)) {
  const double h = (b - a) / n;
  auto sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * (h / 3.0);
}

// Long-time mode amplitude factor for a resonant rectangular pi-pulse with
// rabi frequency W: integral of exp(-i dk t) b_e(t) over the pulse, with
// b_e = sin(W (t + T)/2), T = pi/W, plus the decay tail 1/(i dk + G/2).
inline std::complex<double> resonant_beta(double dk, double W, double G, int panels = 20000) {
  const double T = kPi / W;
  const std::complex<double> I(0.0, 1.0);
  const auto pulse = simpson(
      [&](double t) { return std::exp(-I * dk * t) * std::sin(W * (t + T) / 2.0); }, -T, 0.0, panels);
  return pulse + 1.0 / (I * dk + G / 2.0);
}

}  // namespace oracle
