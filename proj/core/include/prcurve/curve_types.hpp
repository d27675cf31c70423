#ifndef PRCURVE_CURVE_TYPES_HPP_
#define PRCURVE_CURVE_TYPES_HPP_

#include <vector>

namespace prcurve {

struct CurvePoint {
  double x;
  double y;
};

// A functional curve sampled on a strictly increasing x grid, all
// coordinates in [0, 1].
using CurveGrid = std::vector<CurvePoint>;

struct ParametricPoint {
  double t;  // threshold
  double x;
  double y;
};

// A threshold-parameterized curve, t strictly decreasing along the list.
// Unlike CurveGrid it may repeat an x with distinct y values; the
// separation curves are not functions of x.
using ParametricCurve = std::vector<ParametricPoint>;

}  // namespace prcurve

#endif  // PRCURVE_CURVE_TYPES_HPP_
