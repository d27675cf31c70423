// Shared random generators for property-style tests.
#ifndef PRCURVE_TESTS_TEST_UTIL_HPP_
#define PRCURVE_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "prcurve/class_score_model.hpp"
#include "prcurve/random_stream.hpp"
#include "prcurve/score_distribution.hpp"

namespace testutil {

inline double uniform(prcurve::RandomStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform01();
}

inline int uniform_int(prcurve::RandomStream& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(
                                                    hi - lo + 1));
}

// A random continuous, strictly-increasing-on-support law.
inline prcurve::ScoreDistributionPtr random_continuous(
    prcurve::RandomStream& rng) {
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      return prcurve::make_normal(uniform(rng, -5.0, 5.0),
                                  uniform(rng, 0.1, 3.0));
    case 1:
      return prcurve::make_lognormal(uniform(rng, -1.0, 1.0),
                                     uniform(rng, 0.2, 1.5));
    case 2:
      return prcurve::make_beta(uniform(rng, 0.5, 8.0),
                                uniform(rng, 0.5, 8.0));
    default: {
      const double lo = uniform(rng, -2.0, 2.0);
      return prcurve::make_uniform(lo, lo + uniform(rng, 0.1, 4.0));
    }
  }
}

inline prcurve::ScoreDistributionPtr random_discrete(
    prcurve::RandomStream& rng) {
  const int k = uniform_int(rng, 1, 8);
  std::vector<double> atoms;
  double a = uniform(rng, -2.0, 0.0);
  for (int i = 0; i < k; ++i) {
    a += uniform(rng, 0.05, 1.0);
    atoms.push_back(a);
  }
  std::vector<double> weights(atoms.size());
  double total = 0.0;
  for (double& w : weights) {
    w = uniform(rng, 0.05, 1.0);
    total += w;
  }
  for (double& w : weights) w /= total;
  return prcurve::make_discrete(std::move(atoms), std::move(weights));
}

// Any family, possibly wrapped in an affine transform.
inline prcurve::ScoreDistributionPtr random_distribution(
    prcurve::RandomStream& rng) {
  prcurve::ScoreDistributionPtr d;
  const int pick = uniform_int(rng, 0, 5);
  if (pick == 5) {
    d = random_discrete(rng);
  } else {
    d = random_continuous(rng);
  }
  if (uniform_int(rng, 0, 3) == 0) {
    double c1 = uniform(rng, 0.25, 3.0);
    if (d->is_continuous() && uniform_int(rng, 0, 1) == 0) c1 = -c1;
    d = prcurve::make_affine(uniform(rng, -3.0, 3.0), c1, d);
  }
  return d;
}

inline prcurve::ClassScoreModel random_model(prcurve::RandomStream& rng) {
  return prcurve::ClassScoreModel(random_distribution(rng),
                                  random_distribution(rng),
                                  uniform(rng, 0.02, 0.98));
}

}  // namespace testutil

#endif  // PRCURVE_TESTS_TEST_UTIL_HPP_
