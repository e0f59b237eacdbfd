#include "core/spectrum.hpp"

#include <cmath>
#include <cstdio>

#include "common/error.hpp"
#include "core/repr.hpp"

namespace gaugeline {

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<double> make_grid(double min, double max, int points, GridScale scale) {
  if (points < 2) throw ConfigError("grid needs at least 2 points, got " + std::to_string(points));
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
    throw ConfigError("grid needs min < max, got min=" + shortest_repr(min) +
                      " max=" + shortest_repr(max));
  if (scale == GridScale::Log && !(min > 0.0))
    throw DomainError("log grid needs min > 0, got " + shortest_repr(min));
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double last = points - 1;
  for (int i = 0; i < points; ++i) {
    const double t = i / last;
    if (scale == GridScale::Linear) {
      grid[i] = min + (max - min) * t;
    } else {
      grid[i] = min * std::exp(std::log(max / min) * t);
    }
  }
  grid.front() = min;
  grid.back() = max;
  return grid;
}

Spectrum::Spectrum(std::vector<double> grid, std::vector<double> values, SpectrumMeta meta)
    : grid_(std::move(grid)), values_(std::move(values)), meta_(std::move(meta)) {
  if (grid_.size() != values_.size())
    throw ConfigError("spectrum grid and values differ in length (" + std::to_string(grid_.size()) +
                      " vs " + std::to_string(values_.size()) + ")");
  if (grid_.empty()) throw ConfigError("spectrum is empty");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i])) throw DomainError("non-finite grid point");
    if (i > 0 && !(grid_[i] > grid_[i - 1]))
      throw ConfigError("spectrum grid must be strictly increasing (index " + std::to_string(i) + ")");
    if (!std::isfinite(values_[i]) || values_[i] < 0.0)
      throw DomainError("spectrum value at omega_k=" + shortest_repr(grid_[i]) +
                        " is negative or non-finite: " + shortest_repr(values_[i]));
  }
}

void Spectrum::set_extra_column(std::string name, std::vector<double> values) {
  if (values.size() != grid_.size()) throw ConfigError("extra column length mismatch");
  extra_ = std::make_pair(std::move(name), std::move(values));
}

double Spectrum::integral() const {
  double sum = 0.0;
  for (std::size_t i = 1; i < grid_.size(); ++i)
    sum += 0.5 * (values_[i] + values_[i - 1]) * (grid_[i] - grid_[i - 1]);
  return sum;
}

std::string Spectrum::to_csv() const {
  std::string out = "omega_k,S,representation,gamma,omega_eg,lamb_shift,cutoff";
  if (extra_) out += "," + extra_->first;
  out += '\n';
  const std::string tail = "," + meta_.representation + "," + format_g17(meta_.gamma) + "," +
                           format_g17(meta_.omega_eg) + "," + format_g17(meta_.lamb_shift) + "," +
                           format_g17(meta_.cutoff);
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    out += format_g17(grid_[i]);
    out += ',';
    out += format_g17(values_[i]);
    out += tail;
    if (extra_) {
      out += ',';
      out += format_g17(extra_->second[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gaugeline
