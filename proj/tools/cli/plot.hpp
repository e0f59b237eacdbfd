#pragma once

// Static plot documents: a self-contained SVG, or a gnuplot script with
// inline data that renders to SVG.

#include <string>
#include <vector>

namespace gaugeline::cli {

struct Series {
  std::string key;    // representation name, "lorentzian" or "lorentzian+laser"
  std::string label;  // legend text
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotStyle {
  std::string title;
  std::string subtitle;
  std::string x_label = "omega_k";
  std::string y_label = "S";
  bool log_scale = false;  // plot ln y
};

/// Legend/palette slot: Coulomb, Poincare, symmetric, Lorentzian reference,
/// Lorentzian + laser, then everything else in input order.
int palette_slot(const std::string& key);
std::string palette_color(const std::string& key, int fallback_index);

/// Stable sort into palette order. Throws CliError for an empty list,
/// mismatched x/y lengths or (log scale) non-positive values.
std::vector<Series> order_series(std::vector<Series> series, bool log_scale);

std::string render_svg(const std::vector<Series>& series, const PlotStyle& style);
/// `svg_name` is the output file the script writes when run.
std::string render_gnuplot(const std::vector<Series>& series, const PlotStyle& style,
                           const std::string& svg_name);

/// Reads a spectrum CSV written by this tool (omega_k,S,representation,...).
Series read_spectrum_csv(const std::string& path);

}  // namespace gaugeline::cli
