#include "prcurve/population.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "prcurve/errors.hpp"

namespace prcurve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTrendTol = 1e-9;
constexpr double kDensityFloor = 1e-300;

// Direction scan with hysteresis: a move registers only when the value
// leaves a band of half-width tol around the last registered value, so
// floating-point plateaus never flip the verdict.
class TrendScan {
 public:
  explicit TrendScan(double tol) : tol_(tol) {}
  void feed(double v) {
    if (!started_) {
      ref_ = v;
      started_ = true;
      return;
    }
    if (v > ref_ + tol_) {
      increased_ = true;
      ref_ = v;
    } else if (v < ref_ - tol_) {
      decreased_ = true;
      ref_ = v;
    }
  }
  bool increased() const { return increased_; }
  bool decreased() const { return decreased_; }

 private:
  double tol_;
  double ref_ = 0.0;
  bool started_ = false;
  bool increased_ = false;
  bool decreased_ = false;
};

}  // namespace

double eval_roc(const ClassScoreModel& model, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("eval_roc: x must lie in (0, 1)");
  }
  const ExtendedReal t = model.minus().quantile(1.0 - x);
  return model.plus().survival_ext(t);
}

double eval_pr(const ClassScoreModel& model, double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw std::domain_error("eval_pr: x must lie in (0, 1]");
  }
  const double pi_p = model.pi_plus();
  const double pi_m = model.pi_minus();
  if (x == 1.0) {
    // Curve endpoint: F+^{-1}(p) -> m+ as p -> 0, so the limit of the
    // bracket is 1 - F-(m+).
    const double bracket = model.minus().survival_ext(model.plus().support_min());
    return pi_p / (pi_p + pi_m * bracket);
  }
  const ExtendedReal t = model.plus().quantile(1.0 - x);
  const double bracket = model.minus().survival_ext(t);
  return pi_p / (pi_p + pi_m * bracket / x);
}

CurvePoint pr_from_roc(double pi_plus, double x_roc, double y_roc) {
  if (!(pi_plus > 0.0 && pi_plus < 1.0)) {
    throw std::domain_error("pr_from_roc: pi_plus must lie in (0, 1)");
  }
  if (!(x_roc >= 0.0 && x_roc <= 1.0) || !(y_roc >= 0.0 && y_roc <= 1.0)) {
    throw std::domain_error("pr_from_roc: coordinates must lie in [0, 1]");
  }
  if (y_roc == 0.0) {
    throw std::domain_error(
        "pr_from_roc: precision is undefined at tpr = 0 (nothing predicted "
        "positive succeeds)");
  }
  const double pi_minus = 1.0 - pi_plus;
  return {y_roc, pi_plus / (pi_plus + pi_minus * x_roc / y_roc)};
}

namespace {

struct RatioProbe {
  double value = 0.0;
  bool infinite = false;
  bool ok = false;
};

// Evaluates g(t) = f-(t)/f+(t) * weight(t) along a ladder t_i increasing to
// M+ and reports the terminal behavior. weight == nullptr means plain ratio.
RatioProbe probe_upper_tail(const ClassScoreModel& model, bool with_survival) {
  const ExtendedReal m_plus_max = model.plus().support_max();
  std::vector<double> ts;
  if (m_plus_max.is_finite()) {
    const double top = m_plus_max.finite();
    double anchor = model.plus().quantile(0.5).finite();
    double span = top - anchor;
    if (!(span > 0.0)) span = std::max(1.0, std::fabs(top));
    for (int i = 1; i <= 45; ++i) ts.push_back(top - span * std::ldexp(1.0, -i));
  } else {
    for (int i = 3; i <= 52; ++i) {
      const double p = 1.0 - std::ldexp(1.0, -i);
      if (!(p < 1.0)) break;
      ts.push_back(model.plus().quantile(p).finite());
    }
  }

  std::vector<double> values;
  for (double t : ts) {
    const double fp = model.plus().pdf(t);
    const double fm = model.minus().pdf(t);
    double r;
    if (fp < kDensityFloor) {
      if (fm < kDensityFloor) continue;
      r = kInf;
    } else {
      r = fm / fp;
    }
    if (with_survival && std::isfinite(r)) r *= model.plus().survival(t);
    values.push_back(r);
  }
  RatioProbe probe;
  if (values.empty()) return probe;
  probe.ok = true;
  probe.value = values.back();
  // Declared infinite when the tail exceeds 1e12 while still rising.
  if (values.back() > 1e12) {
    bool rising = true;
    const std::size_t n = values.size();
    const std::size_t k0 = n >= 5 ? n - 5 : 0;
    for (std::size_t i = k0; i + 1 < n; ++i) {
      if (!(values[i + 1] >= values[i])) {
        rising = false;
        break;
      }
    }
    probe.infinite = rising;
  }
  return probe;
}

}  // namespace

CurveLimits curve_limits(const ClassScoreModel& model) {
  CurveLimits out{};
  const ScoreDistribution& plus = model.plus();
  const ScoreDistribution& minus = model.minus();
  out.roc_at_0 = plus.survival_ext(minus.support_max());
  out.roc_at_1 = plus.survival_ext(minus.support_min());
  const double pi_p = model.pi_plus();
  const double pi_m = model.pi_minus();
  out.pr_at_1 = pi_p / (pi_p + pi_m * minus.survival_ext(plus.support_min()));

  if (plus.support_max() < minus.support_max()) {
    out.pr_at_0_branch = CurveLimits::ZeroRecallBranch::kLowerPlusMax;
    out.pr_at_0 = 0.0;
    return out;
  }
  if (!plus.is_continuous() || !minus.is_continuous()) {
    out.pr_at_0_branch = CurveLimits::ZeroRecallBranch::kNoDensities;
    return out;
  }
  out.pr_at_0_branch = CurveLimits::ZeroRecallBranch::kDensityRatio;
  const RatioProbe probe = probe_upper_tail(model, /*with_survival=*/false);
  if (!probe.ok) {
    return out;  // could not locate the tail; leave pr_at_0 unspecified
  }
  if (probe.infinite) {
    out.k_estimate = kInf;
    out.pr_at_0 = 0.0;
  } else {
    out.k_estimate = probe.value;
    out.pr_at_0 = pi_p / (pi_p + pi_m * probe.value);
  }
  return out;
}

MonotonicityVerdict classify_pr_monotonicity(const ClassScoreModel& model,
                                             int grid_resolution) {
  if (grid_resolution < 3) {
    throw std::domain_error("classify_pr_monotonicity: grid resolution < 3");
  }
  std::vector<double> xs = default_grid(grid_resolution);
  xs.push_back(1.0);

  TrendScan pr_trend(kTrendTol);
  for (double x : xs) pr_trend.feed(eval_pr(model, x));

  MonotonicityVerdict v{};
  if (pr_trend.increased() && pr_trend.decreased()) {
    v.classification = Monotonicity::kNonMonotone;
  } else if (pr_trend.increased()) {
    v.classification = Monotonicity::kNondecreasing;
  } else {
    v.classification = Monotonicity::kNonincreasing;
  }

  v.m_plus_ge_m_minus =
      !(model.plus().support_max() < model.minus().support_max());
  v.densities_available =
      model.plus().is_continuous() && model.minus().is_continuous();
  v.roc_shape = RocShape::kNeither;
  if (!v.densities_available) return v;

  // Shape of the ROC curve from the density ratio h(t) = f+(t)/f-(t):
  // h nondecreasing <=> concave, h nonincreasing <=> convex. Numerical
  // verdict on a finite grid spanning the bulk of both supports.
  const double lo = std::min(model.plus().quantile(1e-3).finite(),
                             model.minus().quantile(1e-3).finite());
  const double hi = std::max(model.plus().quantile(1.0 - 1e-3).finite(),
                             model.minus().quantile(1.0 - 1e-3).finite());
  TrendScan h_trend(kTrendTol);
  const int n = std::max(grid_resolution, 64);
  for (int i = 0; i <= n; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / n;
    const double fp = model.plus().pdf(t);
    const double fm = model.minus().pdf(t);
    if (fp < kDensityFloor && fm < kDensityFloor) continue;
    double h;
    if (fm < kDensityFloor) {
      h = kInf;
    } else {
      h = fp / fm;
    }
    h_trend.feed(h);
  }
  if (h_trend.increased() && h_trend.decreased()) {
    v.roc_shape = RocShape::kNeither;
  } else if (h_trend.increased()) {
    v.roc_shape = RocShape::kConcave;
  } else if (h_trend.decreased()) {
    v.roc_shape = RocShape::kConvex;
  } else {
    v.roc_shape = RocShape::kConcave;  // constant ratio: both; concave suffices
  }

  v.guaranteed_nonincreasing =
      v.roc_shape == RocShape::kConcave && v.m_plus_ge_m_minus;
  if (v.roc_shape == RocShape::kConvex && !v.m_plus_ge_m_minus) {
    const RatioProbe probe = probe_upper_tail(model, /*with_survival=*/true);
    if (probe.ok) {
      v.tail_limit_zero = !probe.infinite && probe.value < 1e-6;
      v.guaranteed_nondecreasing = *v.tail_limit_zero;
    }
  }
  return v;
}

ReferenceCurves reference_curves(double pi_plus,
                                 const std::vector<double>& grid) {
  if (!(pi_plus > 0.0 && pi_plus < 1.0)) {
    throw std::domain_error("reference_curves: pi_plus must lie in (0, 1)");
  }
  ReferenceCurves out;
  const double pi_minus = 1.0 - pi_plus;
  for (double x : grid) {
    if (!(x > 0.0 && x < 1.0)) {
      throw std::domain_error("reference_curves: grid values must lie in (0, 1)");
    }
    out.chance_roc.push_back({x, x});
    out.chance_pr.push_back({x, pi_plus});
    out.pr_lower_bound.push_back({x, pi_plus * x / (pi_plus * x + pi_minus)});
  }
  return out;
}

namespace {

std::string describe_endpoint(const ExtendedReal& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SeparationCurves separation_curves(const ClassScoreModel& model,
                                   std::vector<double> thresholds) {
  const ExtendedReal m_minus = model.minus().support_min();
  const ExtendedReal M_minus = model.minus().support_max();
  const ExtendedReal m_plus = model.plus().support_min();
  const ExtendedReal M_plus = model.plus().support_max();

  const bool perfect_ok = M_minus < m_plus;
  const bool reverse_ok = M_plus < m_minus;
  if (!perfect_ok && !reverse_ok) {
    throw NotApplicableError(
        "separation_curves: neither ordering holds; perfect needs M- < m+ "
        "(M- = " + describe_endpoint(M_minus) + ", m+ = " +
        describe_endpoint(m_plus) + "), reverse needs M+ < m- (M+ = " +
        describe_endpoint(M_plus) + ", m- = " + describe_endpoint(m_minus) +
        ")");
  }

  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const double pi_p = model.pi_plus();
  const double pi_m = model.pi_minus();
  SeparationCurves out;

  if (perfect_ok) {
    ParametricCurve roc;
    ParametricCurve pr;
    for (double t : thresholds) {
      const ExtendedReal et(t);
      if (et > m_plus && et < M_plus) {
        const double sp = model.plus().survival(t);
        roc.push_back({t, 0.0, sp});
        pr.push_back({t, sp, 1.0});
      } else if (et <= m_plus && et > M_minus) {
        roc.push_back({t, 0.0, 1.0});
        pr.push_back({t, 1.0, 1.0});
      } else if (et <= M_minus && et > m_minus) {
        const double sm = model.minus().survival(t);
        roc.push_back({t, sm, 1.0});
        pr.push_back({t, 1.0, pi_p / (pi_p + pi_m * sm)});
      }
    }
    out.perfect_roc = std::move(roc);
    out.perfect_pr = std::move(pr);
  }

  if (reverse_ok) {
    ParametricCurve roc;
    ParametricCurve pr;
    for (double t : thresholds) {
      const ExtendedReal et(t);
      if (et > m_minus && et < M_minus) {
        roc.push_back({t, model.minus().survival(t), 0.0});
      } else if (et <= m_minus && et > M_plus) {
        roc.push_back({t, 1.0, 0.0});
      } else if (et <= M_plus && et > m_plus) {
        roc.push_back({t, 1.0, model.plus().survival(t)});
      }
      if (et > M_plus && et < M_minus) {
        pr.push_back({t, 0.0, 0.0});
      } else if (et <= M_plus && et > m_plus) {
        const double sp = model.plus().survival(t);
        pr.push_back({t, sp, pi_p * sp / (pi_p * sp + pi_m)});
      }
    }
    out.reverse_roc = std::move(roc);
    out.reverse_pr = std::move(pr);
  }

  return out;
}

std::vector<double> default_grid(int count) {
  if (count < 2) throw std::domain_error("default_grid: need count >= 2");
  constexpr double kEps = 1e-4;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    xs.push_back(kEps + (1.0 - 2.0 * kEps) * static_cast<double>(i) /
                            static_cast<double>(count - 1));
  }
  return xs;
}

CurveGrid sample_roc(const ClassScoreModel& model,
                     const std::vector<double>& xs) {
  CurveGrid out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, eval_roc(model, x)});
  return out;
}

CurveGrid sample_pr(const ClassScoreModel& model,
                    const std::vector<double>& xs) {
  CurveGrid out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, eval_pr(model, x)});
  return out;
}

}  // namespace prcurve
