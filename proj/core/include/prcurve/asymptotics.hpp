#ifndef PRCURVE_ASYMPTOTICS_HPP_
#define PRCURVE_ASYMPTOTICS_HPP_

#include "prcurve/class_score_model.hpp"

namespace prcurve {

// Pointwise ingredients of the limiting variance at recall x:
//   alpha = 1 - F-(F+^{-1}(1-x))
//   slope = f-(F+^{-1}(1-x)) / f+(F+^{-1}(1-x))   (may be +inf)
//   pr    = PR(x)
// Requires a continuous model with densities and 0 < x < 1; otherwise
// throws UnsupportedOperationError / std::domain_error.
struct LocalComponents {
  double alpha;
  double slope;
  double pr;
};

LocalComponents local_components(const ClassScoreModel& model, double x);

// sigma^2(x) = PR(x)^4 / x^2 * skew (1+skew) *
//              [ alpha^2 (1+skew) + slope^2 x(1-x) skew + alpha(1-alpha) ]
// The variance of the sqrt(n)-scaled estimator error in the pointwise
// Gaussian limit. Degenerate (0) and unbounded (+inf) outcomes are flagged
// distinctly: sigma^2 = 0 iff alpha = 0 and slope = 0.
struct VarianceProfile {
  enum class Flag { kOk, kDegenerate, kUnbounded };

  double x;
  double pr;
  double alpha;
  double slope;   // +inf when f+ vanishes at the quantile while f- does not
  double sigma2;  // 0 when degenerate, +inf when unbounded
  double skew;
  Flag flag;
};

VarianceProfile sigma_squared(const ClassScoreModel& model, double x);

// The approximating law for pr_hat(x) at sample size n:
//   mean = PR(x), sd = sigma(x) / sqrt(n).
// Throws DegenerateLimitError when sigma^2 = 0 (do not standardize) and
// UnboundedVarianceError when sigma^2 = +inf.
struct NormalApprox {
  double mean;
  double sd;
};

NormalApprox normal_approximation(const ClassScoreModel& model, double x,
                                  int n);

// max of slope(x) over a dense grid of [x_lo, x_hi]; +inf when the ratio
// blows up anywhere on the grid.
double sup_slope(const ClassScoreModel& model, double x_lo, double x_hi,
                 int grid_points = 2001);

// Diagnostics for the regularity conditions behind the Gaussian limit:
//  1. slope bounded on [eps, 1-eps];
//  2. f+ positive along the quantile path on [eps, 1-eps], with controlled
//     tail behavior: gamma bounds x(1-x) |d/dx log f+(F+^{-1}(1-x))|.
//
// gamma is estimated by central finite differences (step fd_step) and
// maximized over a fixed boundary-refined grid on [1e-3, 1-1e-3]; the tail
// expression attains its sup toward the endpoints, so tying the scan to eps
// would systematically understate it.
struct ConditionReport {
  double epsilon;
  double fd_step;
  double slope_sup;  // may be +inf
  bool slope_bounded;
  double gamma_estimate;
  bool density_positive;
};

ConditionReport condition_check(const ClassScoreModel& model, double epsilon,
                                double fd_step = 1e-4);

}  // namespace prcurve

#endif  // PRCURVE_ASYMPTOTICS_HPP_
