#ifndef PRCURVE_EMPIRICAL_HPP_
#define PRCURVE_EMPIRICAL_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "prcurve/extended_real.hpp"

namespace prcurve {

// Labeled observed scores. Both classes must be nonempty.
struct EmpiricalSample {
  std::vector<double> s_plus;
  std::vector<double> s_minus;

  std::size_t n_plus() const { return s_plus.size(); }
  std::size_t n_minus() const { return s_minus.size(); }
  std::size_t n() const { return s_plus.size() + s_minus.size(); }
};

// Step CDF of a data set with the generalized-inverse quantile
//   F^{-1}(p) = inf{z : F(z) >= p},
// i.e. the ceil(p * count)-th order statistic for p in (0, 1] and -inf at 0.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> scores);

  double cdf(double t) const;
  double survival(double t) const;
  ExtendedReal quantile(double p) const;

  std::size_t count() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

EmpiricalDistribution build_empirical(const std::vector<double>& scores);

// One threshold-indexed estimate: recall and precision at threshold t.
// precision is empty where its denominator is zero (PR* at the maximum
// observed score); it is never patched to 0, 1 or NaN.
struct PrPoint {
  double threshold;
  double recall;
  std::optional<double> precision;
};

// Thresholds are exactly the distinct observed scores, both classes pooled,
// listed by decreasing threshold (increasing recall).
using PRPointSet = std::vector<PrPoint>;

// Strict-inequality estimator: recall = #{S+ > t}/n+,
// precision = #{S+ > t}/#{S > t}.
PRPointSet pr_star(const EmpiricalSample& sample);

// Weak-inequality variant (>=); the precision denominator is always >= 1.
PRPointSet pr_zero(const EmpiricalSample& sample);

// The functional empirical PR estimator: the population PR formula with the
// class empirical distributions plugged in,
//   pr_hat(x) = 1 / (1 + (n-/n+) [1 - Fhat-(Fhat+^{-1}(1-x))] / x),
// defined on (0, 1]; at x = 1 the quantile convention Fhat+^{-1}(0) = -inf
// makes the bracket 1, so pr_hat(1) = n+/n.
//
// The curve is piecewise: at most n+ half-open segments, one per distinct
// observed S+ value, increasing within each segment and right-continuous,
// with a strict drop at every interior discontinuity.
class PRHatCurve {
 public:
  explicit PRHatCurve(const EmpiricalSample& sample);

  // Evaluate at x in (0, 1]. When x equals an achieved recall tp/n+ (as a
  // double), the result is the exact confusion-matrix ratio tp/(tp + fp)
  // at the matching threshold.
  double value(double x) const;

  // Interior discontinuity points x_1 < ... < x_m (achieved recalls of the
  // distinct S+ values where the precision actually jumps).
  const std::vector<double>& discontinuities() const {
    return discontinuities_;
  }

  std::size_t n_plus() const { return sp_.size(); }
  std::size_t n_minus() const { return sm_.size(); }
  std::size_t n() const { return sp_.size() + sm_.size(); }

 private:
  std::vector<double> sp_;  // sorted S+
  std::vector<double> sm_;  // sorted S-
  std::vector<double> discontinuities_;
};

// Convenience one-shot evaluation; builds the curve each call.
double eval_pr_hat(const EmpiricalSample& sample, double x);

PRHatCurve pr_hat_segments(const EmpiricalSample& sample);

}  // namespace prcurve

#endif  // PRCURVE_EMPIRICAL_HPP_
