#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "prcurve/empirical.hpp"
#include "prcurve/population.hpp"
#include "prcurve/presets.hpp"
#include "prcurve/random_stream.hpp"
#include "test_util.hpp"

using namespace prcurve;

namespace {

EmpiricalSample toy_sample() {
  return EmpiricalSample{{0.9, 0.4}, {0.5, 0.1}};
}

// Small samples over a coarse value lattice so ties, within and across
// classes, appear constantly.
EmpiricalSample random_tied_sample(RandomStream& rng, int max_per_class) {
  EmpiricalSample s;
  const int np = testutil::uniform_int(rng, 1, max_per_class);
  const int nm = testutil::uniform_int(rng, 1, max_per_class);
  for (int i = 0; i < np; ++i) {
    s.s_plus.push_back(
        std::floor(testutil::uniform(rng, 0.0, 10.0)) / 10.0 + 0.05);
  }
  for (int i = 0; i < nm; ++i) {
    s.s_minus.push_back(
        std::floor(testutil::uniform(rng, 0.0, 10.0)) / 10.0 + 0.05);
  }
  return s;
}

}  // namespace

TEST_CASE("empirical distribution basics") {
  const EmpiricalDistribution d = build_empirical({0.5, 0.1});
  CHECK(d.cdf(0.4) == 0.5);
  CHECK(d.cdf(0.05) == 0.0);
  CHECK(d.cdf(0.5) == 1.0);
  CHECK(d.quantile(0.5).finite() == 0.1);
  CHECK(d.quantile(0.75).finite() == 0.5);
  CHECK(d.quantile(1.0).finite() == 0.5);
  CHECK(d.quantile(0.0).is_neg_infinity());
  CHECK_THROWS_AS(build_empirical({}), std::domain_error);
  CHECK_THROWS_AS((void)d.quantile(1.5), std::domain_error);
}

TEST_CASE("pr star point set") {
  const PRPointSet pts = pr_star(toy_sample());
  REQUIRE(pts.size() == 4);  // thresholds 0.9, 0.5, 0.4, 0.1
  CHECK(pts[0].threshold == 0.9);
  CHECK(pts[0].recall == 0.0);
  CHECK(!pts[0].precision.has_value());
  CHECK(pts[2].threshold == 0.4);
  CHECK(pts[2].recall == 0.5);
  CHECK(*pts[2].precision == 0.5);
  CHECK(pts[3].threshold == 0.1);
  CHECK(pts[3].recall == 1.0);
  CHECK(std::fabs((*pts[3].precision) - (2.0 / 3.0)) <= (1e-15));
}

TEST_CASE("pr zero point set") {
  const PRPointSet pts = pr_zero(toy_sample());
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].threshold == 0.9);
  CHECK(pts[0].recall == 0.5);
  CHECK(*pts[0].precision == 1.0);
  CHECK(pts[1].threshold == 0.5);
  CHECK(pts[1].recall == 0.5);
  CHECK(*pts[1].precision == 0.5);
  CHECK(pts[3].threshold == 0.1);
  CHECK(pts[3].recall == 1.0);
  CHECK(*pts[3].precision == 0.5);
}

TEST_CASE("pr hat evaluation") {
  const EmpiricalSample s = toy_sample();
  CHECK(eval_pr_hat(s, 0.5) == 0.5);
  CHECK(eval_pr_hat(s, 1.0) == 0.5);  // n+/n via the -inf quantile
  CHECK_THROWS_AS(eval_pr_hat(s, 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_pr_hat(s, 1.5), std::domain_error);

  // Perfect sample separation: precision 1 at every achieved recall.
  const EmpiricalSample sep{{2.0, 3.0, 4.0}, {0.1, 0.2}};
  for (double x : {1.0 / 3.0, 2.0 / 3.0, 0.5, 0.9}) {
    CHECK(eval_pr_hat(sep, x) == 1.0);
  }

  // All plus scores tied: one segment, total on (0, 1), including recalls
  // below 1/n+.
  const EmpiricalSample tied{{0.4, 0.4, 0.4}, {0.1, 0.5}};
  const PRHatCurve tied_curve(tied);
  CHECK(tied_curve.discontinuities().empty());
  // bracket = #{S- > 0.4}/n- = 1/2 at every interior x.
  for (double x : {0.01, 0.2, 2.0 / 3.0, 0.999}) {
    CHECK(tied_curve.value(x) == 3.0 * x / (3.0 * x + 1.0));
  }
}

TEST_CASE("pr hat segments") {
  const PRHatCurve curve = pr_hat_segments(toy_sample());
  REQUIRE(curve.discontinuities().size() == 1);
  CHECK(curve.discontinuities()[0] == 0.5);

  const PRHatCurve single(EmpiricalSample{{0.7}, {0.1, 0.9}});
  CHECK(single.discontinuities().empty());

  // Sampled case F data: a strict drop at every discontinuity.
  RandomStream rng(41, 0);
  const auto& f = find_case_preset("case-f");
  EmpiricalSample fs;
  fs.s_plus = draw_samples(*f.plus, 40, rng);
  fs.s_minus = draw_samples(*f.minus, 40, rng);
  const PRHatCurve fc(fs);
  for (double xj : fc.discontinuities()) {
    const double at = fc.value(xj);
    const double left = fc.value(xj - 1e-12);
    CHECK(left > at);
  }
}

TEST_CASE("property: pr hat bridges to the confusion matrix exactly") {
  RandomStream rng(42, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const EmpiricalSample s = random_tied_sample(rng, 15);
    const PRHatCurve curve(s);
    std::set<double> distinct_plus(s.s_plus.begin(), s.s_plus.end());
    for (double t : distinct_plus) {
      const oracle::Confusion c = oracle::confusion_at(s.s_plus, s.s_minus, t);
      if (c.tp == 0) continue;
      const double recall =
          static_cast<double>(c.tp) / static_cast<double>(s.n_plus());
      const double precision =
          static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
      CHECK(curve.value(recall) == precision);  // bit-exact
    }
  }
}

TEST_CASE("property: pr hat is nondecreasing within segments") {
  RandomStream rng(43, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const EmpiricalSample s = random_tied_sample(rng, 12);
    const PRHatCurve curve(s);
    std::vector<double> edges = curve.discontinuities();
    edges.insert(edges.begin(), 0.0);
    edges.push_back(1.0);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      const double lo = edges[e];
      const double hi = edges[e + 1];
      double prev = -1.0;
      for (int i = 1; i <= 20; ++i) {
        const double x = lo + (hi - lo) * i / 21.0;
        if (!(x > 0.0 && x < 1.0)) continue;
        const double v = curve.value(x);
        if (prev >= 0.0) {
          CHECK(v >= prev);
          if (v < 1.0) CHECK(v > prev);  // strict while fp > 0
        }
        prev = v;
      }
    }
  }
}

TEST_CASE("property: pr hat range and empirical lower bound") {
  RandomStream rng(44, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const EmpiricalSample s = random_tied_sample(rng, 12);
    const PRHatCurve curve(s);
    const double np = static_cast<double>(s.n_plus());
    const double nm = static_cast<double>(s.n_minus());
    const double x = testutil::uniform(rng, 1e-6, 1.0);
    const double v = curve.value(x);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    CHECK(v >= np * x / (np * x + nm) - 1e-12);
  }
}

TEST_CASE("pr hat is consistent at continuity points") {
  // Case A, n = 1e5 per hundred seeds: the estimator stays within 0.01 of
  // the population curve across the middle of the recall range.
  const ClassScoreModel model = make_case_model("case-a", 0.5);
  const std::vector<double> xs = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  std::vector<int> ok(xs.size(), 0);
  const int seeds = 100;
  for (int seed = 0; seed < seeds; ++seed) {
    RandomStream rng(9000 + seed, 0);
    EmpiricalSample s;
    s.s_plus = draw_samples(model.plus(), 50000, rng);
    s.s_minus = draw_samples(model.minus(), 50000, rng);
    const PRHatCurve curve(s);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (std::fabs(curve.value(xs[i]) - eval_pr(model, xs[i])) <= 0.01) {
        ++ok[i];
      }
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(ok[i] >= 99);
  }
}
