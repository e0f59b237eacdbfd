#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "capi.hpp"

namespace gaugeline::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 220.0;
constexpr double kTop = 70.0;
constexpr double kBottom = 60.0;

const char* const kExtraColors[] = {"#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string gp_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("''") : std::string(1, c);
  return out + "'";
}

double plotted(double y, bool log_scale) { return log_scale ? std::log(y) : y; }

// Tick positions at 1, 2 or 5 times a power of ten.
std::vector<double> nice_ticks(double lo, double hi, int target) {
  const double span = hi - lo;
  if (!(span > 0)) return {lo};
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return ticks;
}

struct Bounds {
  double x0, x1, y0, y1;
};

Bounds bounds_of(const std::vector<Series>& series, bool log_scale) {
  Bounds b{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double y = plotted(s.y[i], log_scale);
      if (!std::isfinite(s.x[i]) || !std::isfinite(y)) continue;
      b.x0 = std::min(b.x0, s.x[i]);
      b.x1 = std::max(b.x1, s.x[i]);
      b.y0 = std::min(b.y0, y);
      b.y1 = std::max(b.y1, y);
    }
  }
  if (!std::isfinite(b.x0)) b = {0, 1, 0, 1};
  if (b.x1 == b.x0) b.x0 -= 0.5, b.x1 += 0.5;
  if (b.y1 == b.y0) b.y0 -= 0.5, b.y1 += 0.5;
  if (!log_scale && b.y0 > 0) b.y0 = 0.0;
  const double pad = 0.05 * (b.y1 - b.y0);
  b.y1 += pad;
  if (log_scale) b.y0 -= pad;
  return b;
}

}  // namespace

int palette_slot(const std::string& key) {
  static const char* const order[] = {"coulomb", "poincare", "symmetric", "lorentzian",
                                      "lorentzian+laser"};
  for (int i = 0; i < 5; ++i)
    if (key == order[i]) return i;
  return 5;
}

std::string palette_color(const std::string& key, int fallback_index) {
  static const char* const colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#000000", "#7f7f7f"};
  const int slot = palette_slot(key);
  if (slot < 5) return colors[slot];
  return kExtraColors[fallback_index % 5];
}

std::vector<Series> order_series(std::vector<Series> series, bool log_scale) {
  if (series.empty()) throw CliError(kExitParse, "nothing to plot: the spectrum list is empty");
  for (const auto& s : series) {
    if (s.x.size() != s.y.size() || s.x.empty())
      throw CliError(kExitParse, "series '" + s.key + "' has no samples or mismatched columns");
    if (log_scale)
      for (double y : s.y)
        if (!(y > 0.0))
          throw CliError(kExitDomain,
                         "ln-scale plot needs strictly positive values; series '" + s.key +
                             "' contains " + fmt("%.17g", y));
  }
  std::stable_sort(series.begin(), series.end(), [](const Series& a, const Series& b) {
    return palette_slot(a.key) < palette_slot(b.key);
  });
  return series;
}

std::string render_svg(const std::vector<Series>& input, const PlotStyle& style) {
  const std::vector<Series> series = order_series(input, style.log_scale);
  const Bounds b = bounds_of(series, style.log_scale);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - b.x0) / (b.x1 - b.x0) * pw; };
  const auto py = [&](double y) { return kTop + ph - (y - b.y0) / (b.y1 - b.y0) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"520\" "
       "viewBox=\"0 0 800 520\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"520\" fill=\"#ffffff\"/>\n"
    << "<defs><clipPath id=\"area\"><rect x=\"" << fmt("%.2f", kLeft) << "\" y=\""
    << fmt("%.2f", kTop) << "\" width=\"" << fmt("%.2f", pw) << "\" height=\"" << fmt("%.2f", ph)
    << "\"/></clipPath></defs>\n";
  o << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
    << xml_escape(style.title) << "</text>\n";
  o << "<text x=\"400\" y=\"50\" text-anchor=\"middle\" fill=\"#444444\">"
    << xml_escape(style.subtitle) << "</text>\n";

  o << "<g stroke=\"#000000\" fill=\"none\">\n<rect x=\"" << fmt("%.2f", kLeft) << "\" y=\""
    << fmt("%.2f", kTop) << "\" width=\"" << fmt("%.2f", pw) << "\" height=\"" << fmt("%.2f", ph)
    << "\"/>\n";
  const auto xt = nice_ticks(b.x0, b.x1, 8);
  const auto yt = nice_ticks(b.y0, b.y1, 6);
  for (double t : xt)
    o << "<line x1=\"" << fmt("%.2f", px(t)) << "\" y1=\"" << fmt("%.2f", kTop + ph) << "\" x2=\""
      << fmt("%.2f", px(t)) << "\" y2=\"" << fmt("%.2f", kTop + ph + 5) << "\"/>\n";
  for (double t : yt)
    o << "<line x1=\"" << fmt("%.2f", kLeft - 5) << "\" y1=\"" << fmt("%.2f", py(t)) << "\" x2=\""
      << fmt("%.2f", kLeft) << "\" y2=\"" << fmt("%.2f", py(t)) << "\"/>\n";
  o << "</g>\n<g fill=\"#000000\">\n";
  for (double t : xt)
    o << "<text x=\"" << fmt("%.2f", px(t)) << "\" y=\"" << fmt("%.2f", kTop + ph + 20)
      << "\" text-anchor=\"middle\">" << fmt("%g", t) << "</text>\n";
  for (double t : yt)
    o << "<text x=\"" << fmt("%.2f", kLeft - 8) << "\" y=\"" << fmt("%.2f", py(t) + 4)
      << "\" text-anchor=\"end\">" << fmt("%g", t) << "</text>\n";
  o << "<text x=\"" << fmt("%.2f", kLeft + pw / 2) << "\" y=\"" << fmt("%.2f", kHeight - 15)
    << "\" text-anchor=\"middle\">" << xml_escape(style.x_label) << "</text>\n";
  const std::string ylabel = style.log_scale ? "ln " + style.y_label : style.y_label;
  o << "<text x=\"20\" y=\"" << fmt("%.2f", kTop + ph / 2) << "\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 20 " << fmt("%.2f", kTop + ph / 2) << ")\">" << xml_escape(ylabel)
    << "</text>\n</g>\n";

  o << "<g clip-path=\"url(#area)\" fill=\"none\" stroke-width=\"2\">\n";
  int extra = 0;
  std::vector<std::string> colors;
  for (const auto& s : series) {
    const std::string color = palette_color(s.key, palette_slot(s.key) == 5 ? extra++ : 0);
    colors.push_back(color);
    const bool dashed = s.key == "lorentzian" || s.key == "lorentzian+laser";
    std::string points;
    const auto flush = [&] {
      if (points.empty()) return;
      o << "<polyline stroke=\"" << color << "\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "")
        << " points=\"" << points << "\"/>\n";
      points.clear();
    };
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double y = plotted(s.y[i], style.log_scale);
      if (!std::isfinite(y) || !std::isfinite(s.x[i])) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += fmt("%.2f", px(s.x[i])) + "," + fmt("%.2f", py(y));
    }
    flush();
  }
  o << "</g>\n";

  const double lx = kWidth - kRight + 15;
  o << "<g>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
    const bool dashed = series[i].key == "lorentzian" || series[i].key == "lorentzian+laser";
    o << "<line x1=\"" << fmt("%.2f", lx) << "\" y1=\"" << fmt("%.2f", ly) << "\" x2=\""
      << fmt("%.2f", lx + 25) << "\" y2=\"" << fmt("%.2f", ly) << "\" stroke=\"" << colors[i]
      << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    o << "<text x=\"" << fmt("%.2f", lx + 32) << "\" y=\"" << fmt("%.2f", ly + 4) << "\">"
      << xml_escape(series[i].label) << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

std::string render_gnuplot(const std::vector<Series>& input, const PlotStyle& style,
                           const std::string& svg_name) {
  const std::vector<Series> series = order_series(input, style.log_scale);
  std::ostringstream o;
  o << "# render with: gnuplot <this file>\n"
    << "set encoding utf8\n"
    << "set terminal svg size 800,520 font 'sans,12' background rgb 'white'\n"
    << "set output " << gp_quote(svg_name) << "\n"
    << "set title " << gp_quote(style.title + "\n" + style.subtitle) << " noenhanced\n"
    << "set xlabel " << gp_quote(style.x_label) << " noenhanced\n"
    << "set ylabel " << gp_quote(style.log_scale ? "ln " + style.y_label : style.y_label)
    << " noenhanced\n"
    << "set key outside right top noenhanced\n"
    << "set grid\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    o << "$d" << i << " << EOD\n";
    for (std::size_t j = 0; j < series[i].x.size(); ++j)
      o << fmt("%.17g", series[i].x[j]) << ' ' << fmt("%.17g", series[i].y[j]) << '\n';
    o << "EOD\n";
  }
  o << "plot ";
  int extra = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const std::string color = palette_color(s.key, palette_slot(s.key) == 5 ? extra++ : 0);
    const bool dashed = s.key == "lorentzian" || s.key == "lorentzian+laser";
    if (i > 0) o << ", \\\n     ";
    o << "$d" << i << " using 1:" << (style.log_scale ? "(log($2))" : "2") << " with lines lw 2"
      << (dashed ? " dt 2" : "") << " lc rgb '" << color << "' title " << gp_quote(s.label);
  }
  o << "\n";
  return o.str();
}

Series read_spectrum_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("omega_k,S,representation", 0) != 0)
    throw CliError(kExitParse, path + ":1:1: expected header 'omega_k,S,representation,...'");
  Series s;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() < 3)
      throw CliError(kExitParse, path + ":" + std::to_string(line_no) + ":1: expected at least 3 columns");
    char* end = nullptr;
    const double x = std::strtod(cells[0].c_str(), &end);
    const bool okx = end == cells[0].c_str() + cells[0].size();
    const double y = std::strtod(cells[1].c_str(), &end);
    const bool oky = end == cells[1].c_str() + cells[1].size();
    if (!okx || !oky)
      throw CliError(kExitParse, path + ":" + std::to_string(line_no) + ":1: malformed number");
    if (s.key.empty()) s.key = cells[2];
    s.x.push_back(x);
    s.y.push_back(y);
  }
  if (s.x.empty()) throw CliError(kExitParse, path + ": no data rows");
  if (s.key == "lorentzian") {
    s.label = "Lorentzian reference";
  } else if (s.key == "lorentzian+laser") {
    s.label = "Lorentzian + laser";
  } else {
    gl_gauge g{};
    s.label = gl_gauge_parse(s.key.c_str(), &g) == GL_OK ? gauge_display_name(g) : s.key;
  }
  return s;
}

}  // namespace gaugeline::cli
