#include "prcurve/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "prcurve/errors.hpp"
#include "prcurve/population.hpp"

namespace prcurve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDensityFloor = 1e-300;

void require_densities(const ClassScoreModel& model) {
  if (!model.plus().is_continuous() || !model.minus().is_continuous()) {
    throw UnsupportedOperationError(
        "asymptotics: the Gaussian limit requires class laws with densities");
  }
}

double slope_at_quantile(const ClassScoreModel& model, double t) {
  const double fp = model.plus().pdf(t);
  const double fm = model.minus().pdf(t);
  if (fp < kDensityFloor) {
    return fm < kDensityFloor ? 0.0 : kInf;
  }
  return fm / fp;
}

}  // namespace

LocalComponents local_components(const ClassScoreModel& model, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("local_components: x must lie in (0, 1)");
  }
  require_densities(model);
  const double t = model.plus().quantile(1.0 - x).finite();
  LocalComponents out;
  out.alpha = model.minus().survival(t);
  out.slope = slope_at_quantile(model, t);
  out.pr = eval_pr(model, x);
  return out;
}

VarianceProfile sigma_squared(const ClassScoreModel& model, double x) {
  const LocalComponents c = local_components(model, x);
  const double skew = model.skew();

  VarianceProfile prof;
  prof.x = x;
  prof.pr = c.pr;
  prof.alpha = c.alpha;
  prof.slope = c.slope;
  prof.skew = skew;

  if (std::isinf(c.slope)) {
    prof.sigma2 = kInf;
    prof.flag = VarianceProfile::Flag::kUnbounded;
    return prof;
  }
  if (c.alpha == 0.0 && c.slope == 0.0) {
    prof.sigma2 = 0.0;
    prof.flag = VarianceProfile::Flag::kDegenerate;
    return prof;
  }
  const double bracket = c.alpha * c.alpha * (1.0 + skew) +
                         c.slope * c.slope * x * (1.0 - x) * skew +
                         c.alpha * (1.0 - c.alpha);
  const double pr2 = c.pr * c.pr;
  prof.sigma2 = (pr2 * pr2) / (x * x) * skew * (1.0 + skew) * bracket;
  prof.flag = std::isinf(prof.sigma2) ? VarianceProfile::Flag::kUnbounded
                                      : VarianceProfile::Flag::kOk;
  return prof;
}

NormalApprox normal_approximation(const ClassScoreModel& model, double x,
                                  int n) {
  if (n <= 0) {
    throw std::domain_error("normal_approximation: n must be positive");
  }
  const VarianceProfile prof = sigma_squared(model, x);
  if (prof.flag == VarianceProfile::Flag::kDegenerate) {
    throw DegenerateLimitError(
        "normal_approximation: sigma^2(x) = 0, the limit is degenerate");
  }
  if (prof.flag == VarianceProfile::Flag::kUnbounded) {
    throw UnboundedVarianceError("normal_approximation: sigma^2(x) = +inf");
  }
  return {prof.pr, std::sqrt(prof.sigma2 / static_cast<double>(n))};
}

double sup_slope(const ClassScoreModel& model, double x_lo, double x_hi,
                 int grid_points) {
  if (!(x_lo > 0.0 && x_lo < x_hi && x_hi < 1.0)) {
    throw std::domain_error("sup_slope: need 0 < x_lo < x_hi < 1");
  }
  if (grid_points < 2) {
    throw std::domain_error("sup_slope: need at least 2 grid points");
  }
  require_densities(model);
  double sup = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x =
        x_lo + (x_hi - x_lo) * static_cast<double>(i) / (grid_points - 1);
    const double t = model.plus().quantile(1.0 - x).finite();
    sup = std::max(sup, slope_at_quantile(model, t));
    if (std::isinf(sup)) break;
  }
  return sup;
}

namespace {

// log f+ along the quantile path, the function whose x-derivative the tail
// condition weights by x(1-x).
double log_density_at_quantile(const ClassScoreModel& model, double x) {
  const double t = model.plus().quantile(1.0 - x).finite();
  const double fp = model.plus().pdf(t);
  return std::log(fp);
}

// Scan grid for the tail exponent: uniform bulk plus geometric refinement
// toward both endpoints, bounded away from {0, 1} so the central
// difference never needs points outside (0, 1).
std::vector<double> gamma_grid(double fd_step) {
  const double edge = std::max(1e-3, 10.0 * fd_step);
  std::vector<double> xs;
  for (double x = edge; x < 0.01; x *= 1.15) {
    xs.push_back(x);
    xs.push_back(1.0 - x);
  }
  const int bulk = 999;
  for (int i = 0; i <= bulk; ++i) {
    xs.push_back(0.01 + 0.98 * static_cast<double>(i) / bulk);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

ConditionReport condition_check(const ClassScoreModel& model, double epsilon,
                                double fd_step) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::domain_error("condition_check: need 0 < epsilon < 1/2");
  }
  if (!(fd_step > 0.0 && fd_step < 1e-2)) {
    throw std::domain_error("condition_check: need 0 < fd_step < 1e-2");
  }
  require_densities(model);

  ConditionReport report;
  report.epsilon = epsilon;
  report.fd_step = fd_step;
  report.slope_sup = sup_slope(model, epsilon, 1.0 - epsilon);
  report.slope_bounded = std::isfinite(report.slope_sup);

  bool density_positive = true;
  const int n = 2001;
  for (int i = 0; i < n; ++i) {
    const double x =
        epsilon + (1.0 - 2.0 * epsilon) * static_cast<double>(i) / (n - 1);
    const double t = model.plus().quantile(1.0 - x).finite();
    if (!(model.plus().pdf(t) > 0.0)) {
      density_positive = false;
      break;
    }
  }
  report.density_positive = density_positive;

  double gamma = 0.0;
  for (double x : gamma_grid(fd_step)) {
    const double gl = log_density_at_quantile(model, x - fd_step);
    const double gr = log_density_at_quantile(model, x + fd_step);
    if (!std::isfinite(gl) || !std::isfinite(gr)) continue;
    const double deriv = (gr - gl) / (2.0 * fd_step);
    gamma = std::max(gamma, x * (1.0 - x) * std::fabs(deriv));
  }
  report.gamma_estimate = gamma;
  return report;
}

}  // namespace prcurve
