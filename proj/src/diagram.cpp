#include "bandspec/diagram.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace bandspec {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 150.0;
constexpr double kMarginX = 50.0;
constexpr double kAxisY = 95.0;
constexpr double kBarY = 62.0;
constexpr double kBarHeight = 22.0;
constexpr double kMinBarWidth = 3.0;  // atoms must stay visible

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string label(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_band_diagram(const SpectrumSet& s, const std::string& title) {
  // Pad a degenerate axis (single atom) so the scale is finite.
  double lo = s.min();
  double hi = s.max();
  if (hi - lo < 1e-9) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double span = hi - lo;
  const auto to_x = [&](double v) {
    return kMarginX + (v - lo) / span * (kWidth - 2.0 * kMarginX);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(kHeight) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <text x=\"" + num(kWidth / 2) +
         "\" y=\"24\" font-family=\"monospace\" font-size=\"14\" "
         "text-anchor=\"middle\">" +
         escape_xml(title) + "</text>\n";
  svg += "  <line x1=\"" + num(kMarginX - 10) + "\" y1=\"" + num(kAxisY) + "\" x2=\"" +
         num(kWidth - kMarginX + 10) + "\" y2=\"" + num(kAxisY) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (const auto& band : s.intervals()) {
    const double x0 = to_x(band.lo);
    const double x1 = to_x(band.hi);
    const double w = (x1 - x0 < kMinBarWidth) ? kMinBarWidth : x1 - x0;
    const double x = (x1 - x0 < kMinBarWidth) ? (x0 + x1 - kMinBarWidth) / 2.0 : x0;
    svg += "  <rect x=\"" + num(x) + "\" y=\"" + num(kBarY) + "\" width=\"" + num(w) +
           "\" height=\"" + num(kBarHeight) +
           "\" fill=\"#4477aa\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    // Endpoint ticks and labels; a single centered label for atoms.
    if (band.hi - band.lo < 1e-9) {
      svg += "  <line x1=\"" + num(x0) + "\" y1=\"" + num(kAxisY - 4) + "\" x2=\"" +
             num(x0) + "\" y2=\"" + num(kAxisY + 4) + "\" stroke=\"black\"/>\n";
      svg += "  <text x=\"" + num(x0) + "\" y=\"" + num(kAxisY + 20) +
             "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
             label(band.lo) + "</text>\n";
    } else {
      for (double v : {band.lo, band.hi}) {
        const double tx = to_x(v);
        svg += "  <line x1=\"" + num(tx) + "\" y1=\"" + num(kAxisY - 4) + "\" x2=\"" +
               num(tx) + "\" y2=\"" + num(kAxisY + 4) + "\" stroke=\"black\"/>\n";
        svg += "  <text x=\"" + num(tx) + "\" y=\"" + num(kAxisY + 20) +
               "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
               label(v) + "</text>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

void write_band_diagram(const SpectrumSet& s, const std::string& title,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << render_band_diagram(s, title);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace bandspec
