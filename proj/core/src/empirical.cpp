#include "prcurve/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prcurve {

namespace {

void check_sample(const EmpiricalSample& sample) {
  if (sample.s_plus.empty() || sample.s_minus.empty()) {
    throw std::domain_error("empirical sample needs scores in both classes");
  }
}

// Smallest k in [1, n] with k/n >= p under double comparison; the predicate
// is monotone in k, so binary search applies. p must be in (0, 1].
std::size_t quantile_index(std::size_t n, double p) {
  const double nd = static_cast<double>(n);
  std::size_t lo = 1;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (static_cast<double>(mid) / nd >= p) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::size_t count_greater(const std::vector<double>& sorted, double v) {
  return sorted.size() -
         static_cast<std::size_t>(
             std::upper_bound(sorted.begin(), sorted.end(), v) -
             sorted.begin());
}

std::size_t count_geq(const std::vector<double>& sorted, double v) {
  return sorted.size() -
         static_cast<std::size_t>(
             std::lower_bound(sorted.begin(), sorted.end(), v) -
             sorted.begin());
}

}  // namespace

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> scores)
    : sorted_(std::move(scores)) {
  if (sorted_.empty()) {
    throw std::domain_error("empirical distribution of an empty list");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double t) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::survival(double t) const {
  return static_cast<double>(count_greater(sorted_, t)) /
         static_cast<double>(sorted_.size());
}

ExtendedReal EmpiricalDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("quantile: p must lie in [0, 1]");
  }
  if (p == 0.0) return ExtendedReal::neg_infinity();
  return sorted_[quantile_index(sorted_.size(), p) - 1];
}

EmpiricalDistribution build_empirical(const std::vector<double>& scores) {
  return EmpiricalDistribution(scores);
}

namespace {

std::vector<double> pooled_distinct_desc(const EmpiricalSample& sample) {
  std::vector<double> t;
  t.reserve(sample.n());
  t.insert(t.end(), sample.s_plus.begin(), sample.s_plus.end());
  t.insert(t.end(), sample.s_minus.begin(), sample.s_minus.end());
  std::sort(t.begin(), t.end(), std::greater<>());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

}  // namespace

PRPointSet pr_star(const EmpiricalSample& sample) {
  check_sample(sample);
  std::vector<double> sp = sample.s_plus;
  std::vector<double> sm = sample.s_minus;
  std::sort(sp.begin(), sp.end());
  std::sort(sm.begin(), sm.end());
  const double n_plus = static_cast<double>(sp.size());

  PRPointSet out;
  for (double t : pooled_distinct_desc(sample)) {
    const std::size_t tp = count_greater(sp, t);
    const std::size_t fp = count_greater(sm, t);
    PrPoint point;
    point.threshold = t;
    point.recall = static_cast<double>(tp) / n_plus;
    if (tp + fp > 0) {
      point.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    }
    out.push_back(point);
  }
  return out;
}

PRPointSet pr_zero(const EmpiricalSample& sample) {
  check_sample(sample);
  std::vector<double> sp = sample.s_plus;
  std::vector<double> sm = sample.s_minus;
  std::sort(sp.begin(), sp.end());
  std::sort(sm.begin(), sm.end());
  const double n_plus = static_cast<double>(sp.size());

  PRPointSet out;
  for (double t : pooled_distinct_desc(sample)) {
    const std::size_t tp = count_geq(sp, t);
    const std::size_t fp = count_geq(sm, t);
    PrPoint point;
    point.threshold = t;
    point.recall = static_cast<double>(tp) / n_plus;
    // t is an observed score, so tp + fp >= 1 always.
    point.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    out.push_back(point);
  }
  return out;
}

PRHatCurve::PRHatCurve(const EmpiricalSample& sample)
    : sp_(sample.s_plus), sm_(sample.s_minus) {
  check_sample(sample);
  std::sort(sp_.begin(), sp_.end());
  std::sort(sm_.begin(), sm_.end());

  // Candidate segment boundaries sit at the achieved recalls of the
  // distinct S+ values; a boundary is a discontinuity only where the
  // false-positive count actually changes across it (otherwise adjacent
  // segments join continuously, which is why there are *at most* n+
  // segments).
  const std::size_t np = sp_.size();
  std::vector<double> distinct;
  for (std::size_t j = 0; j < np; ++j) {
    if (j == 0 || sp_[j] != sp_[j - 1]) distinct.push_back(sp_[j]);
  }
  // Walk distinct S+ values from largest to smallest. The boundary between
  // the segments of distinct[d] and distinct[d-1] sits at recall
  // #{S+ > distinct[d-1]} / n+ and is a jump only when the false-positive
  // count changes there.
  std::size_t prev_fp = count_greater(sm_, distinct.back());
  for (std::size_t d = distinct.size(); d-- > 1;) {
    const double lower_value = distinct[d - 1];
    const std::size_t tp = count_greater(sp_, lower_value);
    const std::size_t fp = count_greater(sm_, lower_value);
    if (fp != prev_fp) {
      discontinuities_.push_back(static_cast<double>(tp) /
                                 static_cast<double>(np));
    }
    prev_fp = fp;
  }
  std::sort(discontinuities_.begin(), discontinuities_.end());
}

double PRHatCurve::value(double x) const {
  if (!(x > 0.0 && x <= 1.0)) {
    throw std::domain_error("pr_hat: x must lie in (0, 1]");
  }
  const std::size_t np = sp_.size();
  const double npd = static_cast<double>(np);
  if (x == 1.0) {
    // Fhat+^{-1}(0) = -inf, so the bracket is exactly 1.
    return npd / static_cast<double>(n());
  }

  // When x is the floating-point image of an achieved recall tp/n+, the
  // mathematical evaluation point is that rational number; resolve the
  // segment from the integer tp and return the exact count ratio. Going
  // through 1-x in doubles instead could land on the wrong side of the
  // segment boundary by one ulp.
  const double tp_guess = std::nearbyint(x * npd);
  if (tp_guess >= 1.0 && tp_guess < npd) {
    const std::size_t tp = static_cast<std::size_t>(tp_guess);
    if (static_cast<double>(tp) / npd == x) {
      const double v = sp_[np - tp - 1];  // order statistic with #{S+ > v} = tp
      const std::size_t fp = count_greater(sm_, v);
      return static_cast<double>(tp) / static_cast<double>(tp + fp);
    }
  }

  const double u = 1.0 - x;
  const double v = sp_[quantile_index(np, u) - 1];
  const std::size_t fp = count_greater(sm_, v);
  const double num = npd * x;
  return num / (num + static_cast<double>(fp));
}

double eval_pr_hat(const EmpiricalSample& sample, double x) {
  return PRHatCurve(sample).value(x);
}

PRHatCurve pr_hat_segments(const EmpiricalSample& sample) {
  return PRHatCurve(sample);
}

}  // namespace prcurve
