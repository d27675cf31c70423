#ifndef PRCURVE_SVG_CHART_HPP_
#define PRCURVE_SVG_CHART_HPP_

#include <string>
#include <vector>

#include "prcurve/curve_types.hpp"

namespace prcurve {

struct SvgSeries {
  std::string label;
  std::string color;   // SVG color name or #rrggbb
  CurveGrid points;    // coordinates in [0,1]x[0,1]
  bool dashed = false;
};

// Renders curves on the unit square as a standalone SVG document: axes with
// 0.2 ticks, one polyline per series and a legend. No external renderer.
std::string render_svg_chart(const std::string& title,
                             const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<SvgSeries>& series);

}  // namespace prcurve

#endif  // PRCURVE_SVG_CHART_HPP_
