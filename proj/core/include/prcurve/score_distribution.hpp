#ifndef PRCURVE_SCORE_DISTRIBUTION_HPP_
#define PRCURVE_SCORE_DISTRIBUTION_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "prcurve/extended_real.hpp"
#include "prcurve/random_stream.hpp"

namespace prcurve {

// A score law for one class: exact CDF / survival function, generalized
// inverse quantile, density where one exists, support endpoints and a
// seeded sampler.
//
// The quantile is the generalized inverse F^{-1}(p) = inf{z : F(z) >= p},
// with F^{-1}(0) = -inf by convention and F^{-1}(1) equal to the upper
// support endpoint (possibly +inf).
//
// Instances are immutable after construction and safe to share across
// threads; RandomStream is the only mutable object in the sampling path.
class ScoreDistribution {
 public:
  virtual ~ScoreDistribution() = default;

  // P(S <= t) for finite t.
  virtual double cdf(double t) const = 0;

  // P(S > t) for finite t, computed without subtractive cancellation.
  virtual double survival(double t) const = 0;

  // Density at finite t; 0 outside the support.
  // Throws UnsupportedOperationError for discrete laws.
  virtual double pdf(double t) const = 0;

  // Generalized inverse. Throws std::domain_error unless 0 <= p <= 1.
  virtual ExtendedReal quantile(double p) const = 0;

  virtual ExtendedReal support_min() const = 0;
  virtual ExtendedReal support_max() const = 0;

  virtual bool is_continuous() const = 0;

  // One draw; the default implementation inverts the CDF at a uniform
  // variate, which keeps sampling bit-reproducible across platforms and
  // automatically consistent with the quantile function.
  virtual double sample(RandomStream& stream) const;

  // Human-readable family and parameters, e.g. "normal(mu=0, sigma=1)".
  virtual std::string describe() const = 0;

  // CDF / survival extended to +-infinity.
  double cdf_ext(const ExtendedReal& t) const;
  double survival_ext(const ExtendedReal& t) const;
};

using ScoreDistributionPtr = std::shared_ptr<const ScoreDistribution>;

ScoreDistributionPtr make_normal(double mu, double sigma);
// mu, sigma are the parameters of the underlying normal (log scale).
ScoreDistributionPtr make_lognormal(double mu, double sigma);
ScoreDistributionPtr make_beta(double alpha, double beta);
ScoreDistributionPtr make_uniform(double lo, double hi);
// Atoms must be strictly increasing; weights positive and summing to 1
// within 1e-12. Omitting weights gives the discrete uniform law.
ScoreDistributionPtr make_discrete(std::vector<double> atoms,
                                   std::vector<double> weights = {});
// Y = c0 + c1 * X with c1 != 0. A negative scale requires continuous X.
ScoreDistributionPtr make_affine(double c0, double c1,
                                 ScoreDistributionPtr inner);

// count i.i.d. draws; the same stream state reproduces the same list.
std::vector<double> draw_samples(const ScoreDistribution& d,
                                 std::size_t count, RandomStream& stream);

}  // namespace prcurve

#endif  // PRCURVE_SCORE_DISTRIBUTION_HPP_
