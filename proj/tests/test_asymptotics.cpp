#include <doctest.h>

#include <cmath>
#include <limits>

#include "prcurve/asymptotics.hpp"
#include "prcurve/errors.hpp"
#include "prcurve/population.hpp"
#include "prcurve/presets.hpp"
#include "test_util.hpp"

using namespace prcurve;

TEST_CASE("local components") {
  SUBCASE("identical classes") {
    const auto d = make_lognormal(0.2, 0.8);
    const ClassScoreModel model(d, d, 0.4);
    for (double x : {0.2, 0.5, 0.8}) {
      const LocalComponents c = local_components(model, x);
      CHECK(std::fabs(c.alpha - x) <= 1e-9);
      CHECK(std::fabs(c.slope - 1.0) <= 1e-9);
      CHECK(std::fabs(c.pr - 0.4) <= 1e-9);
    }
  }
  SUBCASE("case D support mismatch zeroes everything") {
    const LocalComponents c =
        local_components(make_case_model("case-d", 0.2), 0.3);
    CHECK(c.alpha == 0.0);
    CHECK(c.slope == 0.0);
    CHECK(c.pr == 1.0);
  }
  SUBCASE("case A closed forms") {
    const LocalComponents c =
        local_components(make_case_model("case-a", 0.5), 0.5);
    CHECK(std::fabs((c.alpha) - (0.08075665923377107)) <= (1e-9));
    CHECK(std::fabs((c.slope) - (std::exp(0.98 - 1.4 * 1.4))) <= (1e-9));
  }
  CHECK_THROWS_AS(local_components(make_case_model("case-f", 0.5), 0.5),
                  UnsupportedOperationError);
  CHECK_THROWS_AS(local_components(make_case_model("case-a", 0.5), 0.0),
                  std::domain_error);
}

TEST_CASE("sigma squared") {
  SUBCASE("degenerate region of case D") {
    const VarianceProfile p =
        sigma_squared(make_case_model("case-d", 0.2), 0.3);
    CHECK(p.sigma2 == 0.0);
    CHECK(p.flag == VarianceProfile::Flag::kDegenerate);
  }
  SUBCASE("identical classes closed form") {
    const auto d = make_normal(0, 1);
    const ClassScoreModel model(d, d, 0.5);
    const VarianceProfile p = sigma_squared(model, 0.5);
    CHECK(std::fabs((p.sigma2) - (0.5)) <= (1e-9));
    for (double pi : {0.25, 1.0 / 3.0, 0.7}) {
      const ClassScoreModel m2(d, d, pi);
      const double skew = m2.skew();
      for (double x : {0.1, 0.35, 0.6, 0.9}) {
        const double expected = std::pow(pi, 4.0) * skew * (1.0 + skew) *
                                (1.0 + skew) / x;
        CHECK(std::fabs((sigma_squared(m2, x).sigma2) - (expected)) <= (
                  1e-9 * std::max(1.0, expected)));
      }
    }
  }
  SUBCASE("term dropout") {
    // alpha = 0 removes the first and third bracket terms: only the slope
    // term survives on the still-overlapping side of case D's boundary.
    {
      const ClassScoreModel m = make_case_model("case-d", 0.2);
      const VarianceProfile p = sigma_squared(m, 0.5);
      const double s = m.skew();
      CHECK(p.alpha == 0.0);
      CHECK(p.slope == 1.0);
      const double expected = std::pow(p.pr, 4.0) / 0.25 * s * (1.0 + s) *
                              (0.25 * s);
      CHECK(std::fabs(p.sigma2 - expected) <= 1e-12 * expected);
    }
    // slope = 0 removes the second; with alpha = 1 the third vanishes too
    // and only the first survives (case E above the support overlap).
    {
      const ClassScoreModel m = make_case_model("case-e", 0.2);
      const VarianceProfile p = sigma_squared(m, 0.75);
      const double s = m.skew();
      CHECK(p.slope == 0.0);
      CHECK(p.alpha == 1.0);
      const double expected = std::pow(p.pr, 4.0) / (0.75 * 0.75) * s *
                              (1.0 + s) * (1.0 + s);
      CHECK(std::fabs(p.sigma2 - expected) <= 1e-12 * expected);
    }
  }
  SUBCASE("variance grows with imbalance") {
    const ClassScoreModel base = make_case_model("case-a", 0.5);
    double prev = 0.0;
    for (double skew : {1.0, 2.0, 4.0, 10.0}) {
      const ClassScoreModel m(base.plus_ptr(), base.minus_ptr(),
                              pi_plus_from_skew(skew));
      const double s2 = sigma_squared(m, 0.5).sigma2;
      CHECK(s2 > prev);
      prev = s2;
    }
    // And with every other ingredient pinned, the skew factors alone are
    // strictly increasing (the variance expression itself).
    const auto with_skew = [](double pr, double alpha, double slope, double x,
                              double skew) {
      return pr * pr * pr * pr / (x * x) * skew * (1.0 + skew) *
             (alpha * alpha * (1.0 + skew) +
              slope * slope * x * (1.0 - x) * skew + alpha * (1.0 - alpha));
    };
    prev = 0.0;
    for (double skew : {1.0, 2.0, 4.0, 10.0}) {
      const double s2 = with_skew(0.7, 0.3, 0.8, 0.4, skew);
      CHECK(s2 > prev);
      prev = s2;
    }
  }
  SUBCASE("invariant under shared increasing affine maps") {
    RandomStream rng(60, 0);
    for (int trial = 0; trial < 50; ++trial) {
      const auto plus = testutil::random_continuous(rng);
      const auto minus = testutil::random_continuous(rng);
      const ClassScoreModel model(plus, minus,
                                  testutil::uniform(rng, 0.1, 0.9));
      const double c0 = testutil::uniform(rng, -2.0, 2.0);
      const double c1 = testutil::uniform(rng, 0.3, 2.5);
      const ClassScoreModel mapped(make_affine(c0, c1, plus),
                                   make_affine(c0, c1, minus),
                                   model.pi_plus());
      const double x = testutil::uniform(rng, 0.05, 0.95);
      const VarianceProfile a = sigma_squared(model, x);
      const VarianceProfile b = sigma_squared(mapped, x);
      if (std::isinf(a.sigma2) || std::isinf(b.sigma2)) {
        CHECK(std::isinf(a.sigma2) == std::isinf(b.sigma2));
      } else {
        CHECK(std::fabs(a.sigma2 - b.sigma2) <=
              1e-9 * std::max(1.0, std::fabs(a.sigma2)));
      }
    }
  }
}

TEST_CASE("normal approximation") {
  const ClassScoreModel model = make_case_model("case-a", 1.0 / 11.0);
  const VarianceProfile prof = sigma_squared(model, 0.5);
  const NormalApprox approx = normal_approximation(model, 0.5, 1000);
  CHECK(approx.mean == eval_pr(model, 0.5));
  CHECK(std::fabs((approx.sd) - (std::sqrt(prof.sigma2 / 1000.0))) <= (
            1e-12));
  const NormalApprox approx4 = normal_approximation(model, 0.5, 4000);
  CHECK(std::fabs((approx4.sd) - (approx.sd / 2.0)) <= (1e-12));
  CHECK_THROWS_AS(normal_approximation(make_case_model("case-d", 0.2), 0.3, 100),
                  DegenerateLimitError);
}

TEST_CASE("condition diagnostics") {
  SUBCASE("case A: exponential-type tails, bounded slope") {
    const ConditionReport r =
        condition_check(make_case_model("case-a", 0.5), 0.05);
    CHECK(std::fabs(r.gamma_estimate - 1.0) <= 0.1);
    CHECK(r.slope_bounded);
    CHECK(r.density_positive);
    CHECK(sup_slope(make_case_model("case-a", 0.5), 0.05, 0.9) < 5.0);
    CHECK(sup_slope(make_case_model("case-a", 0.5), 0.05, 0.9) > 2.0);
  }
  SUBCASE("case B: heavier tail exponent") {
    const ConditionReport r =
        condition_check(make_case_model("case-b", 0.5), 0.05);
    CHECK(std::fabs(r.gamma_estimate - 1.25) <= 0.1);
  }
  SUBCASE("finite-difference step is converged") {
    for (const char* name :
         {"case-a", "case-a-star", "case-b", "case-c", "case-d", "case-e"}) {
      const ClassScoreModel model = make_case_model(name, 0.5);
      const double g1 = condition_check(model, 0.05, 1e-4).gamma_estimate;
      const double g2 = condition_check(model, 0.05, 5e-5).gamma_estimate;
      if (g1 < 1e-9 && g2 < 1e-9) continue;  // flat profile (uniform laws)
      CHECK(std::fabs(g1 - g2) < 0.01 * std::max(g1, g2));
    }
  }
  CHECK_THROWS_AS(condition_check(make_case_model("case-f", 0.5), 0.05),
                  UnsupportedOperationError);
}
