#ifndef PRCURVE_SPECIAL_FUNCTIONS_HPP_
#define PRCURVE_SPECIAL_FUNCTIONS_HPP_

namespace prcurve {

// Standard normal distribution function. Absolute error below 1e-15
// everywhere (erfc based, no subtractive cancellation in either tail).
double normal_cdf(double z);

// 1 - normal_cdf(z), computed without cancellation.
double normal_sf(double z);

// Standard normal density.
double normal_pdf(double z);

// Inverse of normal_cdf on (0, 1). AS241 initial value polished with one
// Newton step against normal_cdf; absolute error well below 1e-12.
// p <= 0 returns -inf, p >= 1 returns +inf.
double normal_quantile(double p);

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
// x in [0, 1], by the Lentz continued fraction. Absolute error below 1e-12
// for the parameter ranges used here.
double incomplete_beta(double a, double b, double x);

// Inverse of incomplete_beta in x: smallest x with I_x(a, b) >= p.
// Bracketing bisection with safeguarded Newton refinement to ~1e-14.
double incomplete_beta_inv(double a, double b, double p);

// log Beta(a, b).
double log_beta(double a, double b);

}  // namespace prcurve

#endif  // PRCURVE_SPECIAL_FUNCTIONS_HPP_
