#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaugeline {

enum class GridScale { Linear, Log };

/// `points` samples from min to max inclusive. Log spacing needs min > 0.
std::vector<double> make_grid(double min, double max, int points, GridScale scale = GridScale::Linear);

struct SpectrumMeta {
  std::string representation;
  double gamma = 0.0;
  double omega_eg = 0.0;
  double lamb_shift = 0.0;
  double cutoff = 0.0;
  std::string note;
  /// Extra key/value echo (stringified), kept in insertion order.
  std::vector<std::pair<std::string, std::string>> params;
};

/// Sampled spectral density on a strictly increasing grid. Not normalized.
class Spectrum {
 public:
  Spectrum(std::vector<double> grid, std::vector<double> values, SpectrumMeta meta);

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const SpectrumMeta& meta() const noexcept { return meta_; }
  SpectrumMeta& meta() noexcept { return meta_; }
  std::size_t size() const noexcept { return grid_.size(); }

  /// Optional per-point column appended to the CSV (e.g. "n_factor").
  void set_extra_column(std::string name, std::vector<double> values);
  const std::optional<std::pair<std::string, std::vector<double>>>& extra_column() const noexcept {
    return extra_;
  }

  /// Trapezoidal area under the samples.
  double integral() const;

  /// CSV: omega_k,S,representation,gamma,omega_eg,lamb_shift,cutoff[,extra]
  /// with every number printed to 17 significant digits.
  std::string to_csv() const;

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  SpectrumMeta meta_;
  std::optional<std::pair<std::string, std::vector<double>>> extra_;
};

/// printf("%.17g") for finite values.
std::string format_g17(double value);

}  // namespace gaugeline
