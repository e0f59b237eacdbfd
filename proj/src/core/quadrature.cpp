#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "common/error.hpp"
#include "core/repr.hpp"

namespace gaugeline {

namespace {

constexpr unsigned kOrder = 20;
using Rule = boost::math::quadrature::gauss<double, kOrder>;

template <class F>
double panel(const F& f, double lo, double hi) {
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      sum += w[i] * f(c);
    } else {
      sum += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    }
  }
  return sum * h;
}

// Panels on [near, far] (either orientation) whose widths grow
// geometrically with distance from `origin`.
template <class F>
double graded(const F& f, double origin, double near, double far, int panels) {
  if (near == far || panels <= 0) return 0.0;
  const double sign = far > near ? 1.0 : -1.0;
  double d0 = std::abs(near - origin);
  const double d1 = std::abs(far - origin);
  double sum = 0.0;
  // A zero inner distance cannot be log-graded; peel off a tiny first panel.
  const double floor = d1 * 1e-14;
  if (d0 < floor) {
    sum += sign * panel(f, std::min(near, origin + sign * floor), std::max(near, origin + sign * floor));
    d0 = floor;
  }
  const double ratio = std::pow(d1 / d0, 1.0 / panels);
  if (ratio < 1.0 + 1e-12) {
    return sum + sign * panel(f, std::min(near, far), std::max(near, far));
  }
  double inner = d0;
  for (int k = 1; k <= panels; ++k) {
    const double outer = (k == panels) ? d1 : d0 * std::pow(ratio, k);
    const double lo = origin + sign * inner;
    const double hi = origin + sign * outer;
    sum += sign * panel(f, std::min(lo, hi), std::max(lo, hi));
    inner = outer;
  }
  return sum;
}

template <class F>
double uniform(const F& f, double lo, double hi, int panels) {
  double sum = 0.0;
  const double step = (hi - lo) / panels;
  for (int k = 0; k < panels; ++k) sum += panel(f, lo + k * step, k + 1 == panels ? hi : lo + (k + 1) * step);
  return sum;
}

double regular_with_focus(const std::function<double(double)>& f, double a, double b, double focus,
                          int panels) {
  if (focus <= a) return graded(f, focus, a, b, panels);
  if (focus >= b) return -graded(f, focus, b, a, panels);
  const double left = focus - a;
  const double right = b - focus;
  const int pl = std::max(1, static_cast<int>(std::lround(panels * left / (left + right))));
  const int pr = std::max(1, panels - pl);
  return -graded(f, focus, focus, a, pl) + graded(f, focus, focus, b, pr);
}

double pv_once(const std::function<double(double)>& f, double a, double b, double pole, int panels) {
  auto kernel = [&](double x) { return f(x) / (x - pole); };
  if (pole < a || pole > b) {
    return regular_with_focus(kernel, a, b, pole, panels);
  }
  const double h = std::min(pole - a, b - pole);
  // Symmetric pairing removes the singularity:
  //   Int_{p-h}^{p+h} f/(x-p) = Int_0^h (f(p+t) - f(p-t)) / t dt
  auto paired = [&](double t) { return (f(pole + t) - f(pole - t)) / t; };
  int inner_panels = std::max(2, panels / 4);
  double sum = h > 0.0 ? uniform(paired, 0.0, h, inner_panels) : 0.0;
  const int outer_panels = std::max(1, panels - inner_panels);
  if (pole - a > h) {
    sum += -graded(kernel, pole, pole - h, a, outer_panels);
  } else if (b - pole > h) {
    sum += graded(kernel, pole, pole + h, b, outer_panels);
  }
  return sum;
}

void check_inputs(double a, double b, int points) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
    throw DomainError("integration interval must satisfy a < b, got [" + shortest_repr(a) + ", " +
                      shortest_repr(b) + "]");
  if (points < 2 * static_cast<int>(kOrder))
    throw ConfigError("quadrature needs at least " + std::to_string(2 * kOrder) + " points");
}

Quadrature finish(double coarse, double fine) {
  if (!std::isfinite(coarse) || !std::isfinite(fine))
    throw IntegratorError("quadrature produced a non-finite value");
  return {fine, std::abs(fine - coarse)};
}

}  // namespace

Quadrature principal_value(const std::function<double(double)>& f, double a, double b, double pole,
                           int points) {
  check_inputs(a, b, points);
  if (!std::isfinite(pole)) throw DomainError("pole must be finite");
  if ((pole == a || pole == b) && f(pole) != 0.0)
    throw DomainError("principal value diverges: pole " + shortest_repr(pole) +
                      " sits on an endpoint");
  const int panels = points / static_cast<int>(kOrder);
  const double fine = pv_once(f, a, b, pole, panels);
  const double coarse = pv_once(f, a, b, pole, panels / 2);
  return finish(coarse, fine);
}

Quadrature integrate_graded(const std::function<double(double)>& f, double a, double b,
                            double focus, int points) {
  check_inputs(a, b, points);
  const int panels = points / static_cast<int>(kOrder);
  const double fine = regular_with_focus(f, a, b, focus, panels);
  const double coarse = regular_with_focus(f, a, b, focus, panels / 2);
  return finish(coarse, fine);
}

}  // namespace gaugeline
