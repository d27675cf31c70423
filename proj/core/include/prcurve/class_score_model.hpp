#ifndef PRCURVE_CLASS_SCORE_MODEL_HPP_
#define PRCURVE_CLASS_SCORE_MODEL_HPP_

#include <stdexcept>
#include <utility>

#include "prcurve/score_distribution.hpp"

namespace prcurve {

// The pair of class score laws plus the positive-class prior. Population
// ROC and PR curves are functions of this object.
class ClassScoreModel {
 public:
  ClassScoreModel(ScoreDistributionPtr plus, ScoreDistributionPtr minus,
                  double pi_plus)
      : plus_(std::move(plus)), minus_(std::move(minus)), pi_plus_(pi_plus) {
    if (!plus_ || !minus_) {
      throw std::invalid_argument("model: both class laws are required");
    }
    if (!(pi_plus > 0.0 && pi_plus < 1.0)) {
      throw std::invalid_argument("model: pi_plus must lie in (0, 1)");
    }
  }

  const ScoreDistribution& plus() const { return *plus_; }
  const ScoreDistribution& minus() const { return *minus_; }
  const ScoreDistributionPtr& plus_ptr() const { return plus_; }
  const ScoreDistributionPtr& minus_ptr() const { return minus_; }

  double pi_plus() const { return pi_plus_; }
  double pi_minus() const { return 1.0 - pi_plus_; }
  // Class-imbalance ratio pi_minus / pi_plus; 1 means balanced classes.
  double skew() const { return pi_minus() / pi_plus_; }

 private:
  ScoreDistributionPtr plus_;
  ScoreDistributionPtr minus_;
  double pi_plus_;
};

// pi_plus and skew parameterize the same quantity: pi_plus = 1/(1+skew).
inline double pi_plus_from_skew(double skew) {
  if (!(skew > 0.0)) throw std::domain_error("skew must be positive");
  return 1.0 / (1.0 + skew);
}

}  // namespace prcurve

#endif  // PRCURVE_CLASS_SCORE_MODEL_HPP_
