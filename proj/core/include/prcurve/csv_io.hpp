#ifndef PRCURVE_CSV_IO_HPP_
#define PRCURVE_CSV_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "prcurve/asymptotics.hpp"
#include "prcurve/curve_types.hpp"
#include "prcurve/empirical.hpp"
#include "prcurve/simulation.hpp"

namespace prcurve {

// Canonical number formatting for every emitted file: 9 significant digits,
// '.' decimal separator, no locale dependence. Re-reading and re-emitting a
// file through this formatter is byte-stable.
std::string format_double(double v);

// Functional curve, header "x,y".
void write_curve_csv(std::ostream& os, const CurveGrid& curve);
CurveGrid read_curve_csv(std::istream& is);

// Threshold-parameterized curve, header "t,x,y".
void write_parametric_csv(std::ostream& os, const ParametricCurve& curve);

// PR point set, header "t,recall,precision"; an undefined precision is the
// literal "undefined".
void write_point_set_csv(std::ostream& os, const PRPointSet& points);

// pr_hat sampled on a grid, header "x,pr_hat".
void write_pr_hat_csv(std::ostream& os, const std::vector<double>& xs,
                      const std::vector<double>& values);

// Variance profiles, header "x,pr,alpha,slope,sigma2,flag" with flag in
// {ok, degenerate, unbounded}.
void write_variance_csv(std::ostream& os,
                        const std::vector<VarianceProfile>& profiles);

// Long-format simulation matrix, header "x,replicate,pr_hat", ordered by
// grid value then replicate.
void write_simulation_csv(std::ostream& os, const SimulationResult& result);

// Labeled scores, header "label,score"; labels +, -, 1, 0, pos, neg.
// Malformed rows raise ParseError with the offending line number.
EmpiricalSample read_score_csv(std::istream& is);
void write_score_csv(std::ostream& os, const EmpiricalSample& sample);

}  // namespace prcurve

#endif  // PRCURVE_CSV_IO_HPP_
