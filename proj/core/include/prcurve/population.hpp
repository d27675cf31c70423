#ifndef PRCURVE_POPULATION_HPP_
#define PRCURVE_POPULATION_HPP_

#include <optional>
#include <vector>

#include "prcurve/class_score_model.hpp"
#include "prcurve/curve_types.hpp"

namespace prcurve {

// ROC ordinate at false positive rate x in (0, 1):
//   y = 1 - F+(F-^{-1}(1 - x)).
// Nondecreasing in x. Throws std::domain_error outside (0, 1).
double eval_roc(const ClassScoreModel& model, double x);

// PR ordinate (precision) at recall x in (0, 1]:
//   y = pi+ / (pi+ + pi- * [1 - F-(F+^{-1}(1 - x))] / x).
// x = 1 returns the curve endpoint, the limit as x -> 1, which equals
// pi+ / (pi+ + pi- * [1 - F-(m+)]). Throws std::domain_error outside (0, 1].
double eval_pr(const ClassScoreModel& model, double x);

// Maps an ROC point to the PR point it induces at prior pi_plus:
//   x_pr = y_roc,  y_pr = pi+ / (pi+ + pi- * x_roc / y_roc).
// Throws std::domain_error when y_roc = 0 (precision undefined).
CurvePoint pr_from_roc(double pi_plus, double x_roc, double y_roc);

// One-sided limits of both curves at their open endpoints.
struct CurveLimits {
  // How the precision limit at recall 0 is determined.
  enum class ZeroRecallBranch {
    kDensityRatio,   // M+ >= M-: limit pi+/(pi+ + pi- k), k = lim f-/f+
    kLowerPlusMax,   // M+ <  M-: limit is exactly 0
    kNoDensities,    // M+ >= M- but a class law is discrete: no k available
  };

  double roc_at_0;  // x_roc -> 0+:  1 - F+(M-)
  double roc_at_1;  // x_roc -> 1-:  1 - F+(m-)
  double pr_at_1;   // x_pr  -> 1-:  pi+/(pi+ + pi- [1 - F-(m+)])
  ZeroRecallBranch pr_at_0_branch;
  std::optional<double> pr_at_0;     // absent for kNoDensities
  std::optional<double> k_estimate;  // may be +inf; absent unless kDensityRatio
};

CurveLimits curve_limits(const ClassScoreModel& model);

enum class Monotonicity { kNonincreasing, kNondecreasing, kNonMonotone };
enum class RocShape { kConcave, kConvex, kNeither };

// Classification of the PR curve sampled on a grid, together with the
// sufficient-condition report: the numerically observed shape of the ROC
// curve (monotonicity of the density ratio f+/f-) and the support-endpoint
// comparison. When the shape conditions apply they guarantee the sampled
// classification; otherwise only the sampled verdict stands.
struct MonotonicityVerdict {
  Monotonicity classification;
  bool densities_available;
  RocShape roc_shape;                  // meaningful when densities_available
  bool m_plus_ge_m_minus;              // M+ >= M-
  bool guaranteed_nonincreasing;       // concave ROC and M+ >= M-
  bool guaranteed_nondecreasing;       // convex ROC, M+ < M-, limit is 0
  std::optional<bool> tail_limit_zero; // lim f-/f+ [1-F+] = 0 (when probed)
};

// grid_resolution must be >= 3 (throws std::domain_error otherwise).
// A direction change counts only when the PR value moves by more than 1e-9
// against the running trend.
MonotonicityVerdict classify_pr_monotonicity(const ClassScoreModel& model,
                                             int grid_resolution);

// Chance curves (identical class laws) and the achievable PR lower bound:
// chance ROC y = x, chance PR y = pi+, bound y = pi+ x / (pi+ x + pi-).
struct ReferenceCurves {
  CurveGrid chance_roc;
  CurveGrid chance_pr;
  CurveGrid pr_lower_bound;
};

ReferenceCurves reference_curves(double pi_plus,
                                 const std::vector<double>& grid);

// Threshold-parameterized curves for the separation orderings. The perfect
// branch requires M- < m+, the reverse branch M+ < m-; whichever holds is
// emitted and the other is left empty. If neither holds, throws
// NotApplicableError naming the violated inequalities.
struct SeparationCurves {
  std::optional<ParametricCurve> perfect_roc;
  std::optional<ParametricCurve> perfect_pr;
  std::optional<ParametricCurve> reverse_roc;
  std::optional<ParametricCurve> reverse_pr;
};

SeparationCurves separation_curves(const ClassScoreModel& model,
                                   std::vector<double> thresholds);

// Default evaluation grid: `count` evenly spaced points on
// [1e-4, 1 - 1e-4]. The curves are defined on open intervals; endpoint
// behavior is reported by curve_limits, not by grid extrapolation.
std::vector<double> default_grid(int count);

CurveGrid sample_roc(const ClassScoreModel& model,
                     const std::vector<double>& xs);
// xs may include 1.0 (the PR curve endpoint).
CurveGrid sample_pr(const ClassScoreModel& model,
                    const std::vector<double>& xs);

}  // namespace prcurve

#endif  // PRCURVE_POPULATION_HPP_
