#include "prcurve/svg_chart.hpp"

#include <sstream>

namespace prcurve {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;
constexpr int kPlotW = kWidth - kMarginLeft - kMarginRight;
constexpr int kPlotH = kHeight - kMarginTop - kMarginBottom;

// SVG y grows downward.
double px(double x) { return kMarginLeft + x * kPlotW; }
double py(double y) { return kMarginTop + (1.0 - y) * kPlotH; }

std::string escape(const std::string& s) {
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

std::string render_svg_chart(const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<SvgSeries>& series) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"16\">"
     << escape(title) << "</text>\n";

  // frame and ticks every 0.2
  os << "  <rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop
     << "\" width=\"" << kPlotW << "\" height=\"" << kPlotH
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i * 0.2;
    os << "  <line x1=\"" << px(v) << "\" y1=\"" << py(0.0) << "\" x2=\""
       << px(v) << "\" y2=\"" << py(0.0) + 5 << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << px(v) << "\" y=\"" << py(0.0) + 20
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"12\">"
       << v << "</text>\n";
    os << "  <line x1=\"" << px(0.0) - 5 << "\" y1=\"" << py(v) << "\" x2=\""
       << px(0.0) << "\" y2=\"" << py(v) << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << px(0.0) - 8 << "\" y=\"" << py(v) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          "font-size=\"12\">"
       << v << "</text>\n";
  }
  os << "  <text x=\"" << kMarginLeft + kPlotW / 2 << "\" y=\""
     << kHeight - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"13\">"
     << escape(x_label) << "</text>\n";
  os << "  <text x=\"16\" y=\"" << kMarginTop + kPlotH / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"13\" transform=\"rotate(-90 16 "
     << kMarginTop + kPlotH / 2 << ")\">" << escape(y_label) << "</text>\n";

  int legend_row = 0;
  for (const SvgSeries& s : series) {
    if (!s.points.empty()) {
      os << "  <polyline fill=\"none\" stroke=\"" << escape(s.color)
         << "\" stroke-width=\"1.5\"";
      if (s.dashed) os << " stroke-dasharray=\"6 4\"";
      os << " points=\"";
      for (const CurvePoint& p : s.points) {
        os << px(p.x) << ',' << py(p.y) << ' ';
      }
      os << "\"/>\n";
    }
    const int ly = kMarginTop + 14 + 18 * legend_row++;
    os << "  <line x1=\"" << kMarginLeft + kPlotW - 150 << "\" y1=\"" << ly
       << "\" x2=\"" << kMarginLeft + kPlotW - 120 << "\" y2=\"" << ly
       << "\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\"";
    if (s.dashed) os << " stroke-dasharray=\"6 4\"";
    os << "/>\n";
    os << "  <text x=\"" << kMarginLeft + kPlotW - 114 << "\" y=\"" << ly + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace prcurve
