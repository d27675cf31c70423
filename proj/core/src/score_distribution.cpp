#include "prcurve/score_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "prcurve/errors.hpp"
#include "prcurve/special_functions.hpp"

namespace prcurve {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("quantile: p must lie in [0, 1]");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

double ScoreDistribution::sample(RandomStream& stream) const {
  return quantile(stream.uniform01()).finite();
}

double ScoreDistribution::cdf_ext(const ExtendedReal& t) const {
  if (t.is_neg_infinity()) return 0.0;
  if (t.is_pos_infinity()) return 1.0;
  return cdf(t.finite());
}

double ScoreDistribution::survival_ext(const ExtendedReal& t) const {
  if (t.is_neg_infinity()) return 1.0;
  if (t.is_pos_infinity()) return 0.0;
  return survival(t.finite());
}

std::vector<double> draw_samples(const ScoreDistribution& d, std::size_t count,
                                 RandomStream& stream) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(d.sample(stream));
  return out;
}

namespace {

class NormalScore final : public ScoreDistribution {
 public:
  NormalScore(double mu, double sigma) : mu_(mu), sigma_(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma)) {
      throw std::invalid_argument("normal: sigma must be positive and finite");
    }
  }

  double cdf(double t) const override { return normal_cdf((t - mu_) / sigma_); }
  double survival(double t) const override {
    return normal_sf((t - mu_) / sigma_);
  }
  double pdf(double t) const override {
    return normal_pdf((t - mu_) / sigma_) / sigma_;
  }
  ExtendedReal quantile(double p) const override {
    check_probability(p);
    if (p == 0.0) return ExtendedReal::neg_infinity();
    if (p == 1.0) return ExtendedReal::pos_infinity();
    return mu_ + sigma_ * normal_quantile(p);
  }
  ExtendedReal support_min() const override {
    return ExtendedReal::neg_infinity();
  }
  ExtendedReal support_max() const override {
    return ExtendedReal::pos_infinity();
  }
  bool is_continuous() const override { return true; }
  std::string describe() const override {
    return "normal(mu=" + fmt(mu_) + ", sigma=" + fmt(sigma_) + ")";
  }

 private:
  double mu_;
  double sigma_;
};

class LogNormalScore final : public ScoreDistribution {
 public:
  LogNormalScore(double mu, double sigma) : mu_(mu), sigma_(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma)) {
      throw std::invalid_argument(
          "lognormal: sigma must be positive and finite");
    }
  }

  double cdf(double t) const override {
    if (t <= 0.0) return 0.0;
    return normal_cdf((std::log(t) - mu_) / sigma_);
  }
  double survival(double t) const override {
    if (t <= 0.0) return 1.0;
    return normal_sf((std::log(t) - mu_) / sigma_);
  }
  double pdf(double t) const override {
    if (t <= 0.0) return 0.0;
    return normal_pdf((std::log(t) - mu_) / sigma_) / (t * sigma_);
  }
  ExtendedReal quantile(double p) const override {
    check_probability(p);
    if (p == 0.0) return ExtendedReal::neg_infinity();
    if (p == 1.0) return ExtendedReal::pos_infinity();
    return std::exp(mu_ + sigma_ * normal_quantile(p));
  }
  ExtendedReal support_min() const override { return 0.0; }
  ExtendedReal support_max() const override {
    return ExtendedReal::pos_infinity();
  }
  bool is_continuous() const override { return true; }
  std::string describe() const override {
    return "lognormal(mu=" + fmt(mu_) + ", sigma=" + fmt(sigma_) + ")";
  }

 private:
  double mu_;
  double sigma_;
};

class BetaScore final : public ScoreDistribution {
 public:
  BetaScore(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0) || !(b > 0.0)) {
      throw std::invalid_argument("beta: both shape parameters must be > 0");
    }
  }

  double cdf(double t) const override {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return incomplete_beta(a_, b_, t);
  }
  double survival(double t) const override {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    // I_{1-t}(b, a) is the exact complement; no cancellation.
    return incomplete_beta(b_, a_, 1.0 - t);
  }
  double pdf(double t) const override {
    if (t < 0.0 || t > 1.0) return 0.0;
    if (t == 0.0) {
      if (a_ < 1.0) return std::numeric_limits<double>::infinity();
      return a_ == 1.0 ? b_ : 0.0;
    }
    if (t == 1.0) {
      if (b_ < 1.0) return std::numeric_limits<double>::infinity();
      return b_ == 1.0 ? a_ : 0.0;
    }
    return std::exp((a_ - 1.0) * std::log(t) + (b_ - 1.0) * std::log1p(-t) -
                    log_beta(a_, b_));
  }
  ExtendedReal quantile(double p) const override {
    check_probability(p);
    if (p == 0.0) return ExtendedReal::neg_infinity();
    if (p == 1.0) return 1.0;
    return incomplete_beta_inv(a_, b_, p);
  }
  ExtendedReal support_min() const override { return 0.0; }
  ExtendedReal support_max() const override { return 1.0; }
  bool is_continuous() const override { return true; }
  std::string describe() const override {
    return "beta(a=" + fmt(a_) + ", b=" + fmt(b_) + ")";
  }

 private:
  double a_;
  double b_;
};

class UniformScore final : public ScoreDistribution {
 public:
  UniformScore(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw std::invalid_argument("uniform: need finite lo < hi");
    }
  }

  double cdf(double t) const override {
    if (t < lo_) return 0.0;
    if (t >= hi_) return 1.0;
    return (t - lo_) / (hi_ - lo_);
  }
  double survival(double t) const override {
    if (t < lo_) return 1.0;
    if (t >= hi_) return 0.0;
    return (hi_ - t) / (hi_ - lo_);
  }
  double pdf(double t) const override {
    return (t >= lo_ && t <= hi_) ? 1.0 / (hi_ - lo_) : 0.0;
  }
  ExtendedReal quantile(double p) const override {
    check_probability(p);
    if (p == 0.0) return ExtendedReal::neg_infinity();
    if (p == 1.0) return hi_;
    return lo_ + p * (hi_ - lo_);
  }
  ExtendedReal support_min() const override { return lo_; }
  ExtendedReal support_max() const override { return hi_; }
  bool is_continuous() const override { return true; }
  std::string describe() const override {
    return "uniform(lo=" + fmt(lo_) + ", hi=" + fmt(hi_) + ")";
  }

 private:
  double lo_;
  double hi_;
};

class DiscreteScore final : public ScoreDistribution {
 public:
  DiscreteScore(std::vector<double> atoms, std::vector<double> weights)
      : atoms_(std::move(atoms)) {
    if (atoms_.empty()) {
      throw std::invalid_argument("discrete: need at least one atom");
    }
    if (std::adjacent_find(atoms_.begin(), atoms_.end(),
                           std::greater_equal<>()) != atoms_.end()) {
      throw std::invalid_argument("discrete: atoms must be strictly increasing");
    }
    if (weights.empty()) {
      weights.assign(atoms_.size(), 1.0 / static_cast<double>(atoms_.size()));
    }
    if (weights.size() != atoms_.size()) {
      throw std::invalid_argument("discrete: one weight per atom required");
    }
    double total = 0.0;
    for (double w : weights) {
      if (!(w > 0.0)) {
        throw std::invalid_argument("discrete: weights must be positive");
      }
      total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("discrete: weights must sum to 1 (1e-12)");
    }
    cum_.reserve(weights.size());
    double acc = 0.0;
    for (double w : weights) {
      acc += w;
      cum_.push_back(acc / total);
    }
    cum_.back() = 1.0;  // exact upper endpoint regardless of rounding
    // Right-to-left accumulation keeps survival() free of cancellation.
    sur_.assign(weights.size(), 0.0);
    double tail = 0.0;
    for (std::size_t i = weights.size(); i-- > 0;) {
      sur_[i] = tail / total;
      tail += weights[i];
    }
    weights_ = std::move(weights);
  }

  double cdf(double t) const override {
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), t);
    if (it == atoms_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
  }
  double survival(double t) const override {
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), t);
    if (it == atoms_.begin()) return 1.0;
    return sur_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
  }
  double pdf(double) const override {
    throw UnsupportedOperationError("discrete law has no density");
  }
  ExtendedReal quantile(double p) const override {
    check_probability(p);
    if (p == 0.0) return ExtendedReal::neg_infinity();
    auto it = std::lower_bound(cum_.begin(), cum_.end(), p);
    return atoms_[static_cast<std::size_t>(it - cum_.begin())];
  }
  ExtendedReal support_min() const override { return atoms_.front(); }
  ExtendedReal support_max() const override { return atoms_.back(); }
  bool is_continuous() const override { return false; }
  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  std::string describe() const override {
    std::string s = "discrete(atoms=[";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) s += ", ";
      s += fmt(atoms_[i]);
    }
    s += "], weights=[";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i) s += ", ";
      s += fmt(weights_[i]);
    }
    return s + "])";
  }

 private:
  std::vector<double> atoms_;
  std::vector<double> weights_;
  std::vector<double> cum_;
  std::vector<double> sur_;
};

// Y = c0 + c1 * X. A negative scale flips the CDF: F_Y(t) = 1 - F_X(u) with
// u = (t - c0)/c1, valid when X is continuous (no atom sits exactly at u).
class AffineScore final : public ScoreDistribution {
 public:
  AffineScore(double c0, double c1, ScoreDistributionPtr inner)
      : c0_(c0), c1_(c1), inner_(std::move(inner)) {
    if (!std::isfinite(c0) || !std::isfinite(c1) || c1 == 0.0) {
      throw std::invalid_argument("affine: need finite c0 and nonzero c1");
    }
    if (!inner_) throw std::invalid_argument("affine: inner law required");
    if (c1_ < 0.0 && !inner_->is_continuous()) {
      throw std::invalid_argument(
          "affine: negative scale requires a continuous inner law");
    }
  }

  double cdf(double t) const override {
    const double u = (t - c0_) / c1_;
    return c1_ > 0.0 ? inner_->cdf(u) : inner_->survival(u);
  }
  double survival(double t) const override {
    const double u = (t - c0_) / c1_;
    return c1_ > 0.0 ? inner_->survival(u) : inner_->cdf(u);
  }
  double pdf(double t) const override {
    return inner_->pdf((t - c0_) / c1_) / std::fabs(c1_);
  }
  ExtendedReal quantile(double p) const override {
    check_probability(p);
    if (p == 0.0) return ExtendedReal::neg_infinity();
    if (p == 1.0) return support_max();
    const ExtendedReal q =
        c1_ > 0.0 ? inner_->quantile(p) : inner_->quantile(1.0 - p);
    return transform(q);
  }
  ExtendedReal support_min() const override {
    return c1_ > 0.0 ? transform(inner_->support_min())
                     : transform(inner_->support_max());
  }
  ExtendedReal support_max() const override {
    return c1_ > 0.0 ? transform(inner_->support_max())
                     : transform(inner_->support_min());
  }
  bool is_continuous() const override { return inner_->is_continuous(); }
  double sample(RandomStream& stream) const override {
    return c0_ + c1_ * inner_->sample(stream);
  }
  std::string describe() const override {
    return "affine(c0=" + fmt(c0_) + ", c1=" + fmt(c1_) + ", of=" +
           inner_->describe() + ")";
  }

 private:
  ExtendedReal transform(const ExtendedReal& v) const {
    if (v.is_neg_infinity()) {
      return c1_ > 0.0 ? ExtendedReal::neg_infinity()
                       : ExtendedReal::pos_infinity();
    }
    if (v.is_pos_infinity()) {
      return c1_ > 0.0 ? ExtendedReal::pos_infinity()
                       : ExtendedReal::neg_infinity();
    }
    return c0_ + c1_ * v.finite();
  }

  double c0_;
  double c1_;
  ScoreDistributionPtr inner_;
};

}  // namespace

ScoreDistributionPtr make_normal(double mu, double sigma) {
  return std::make_shared<NormalScore>(mu, sigma);
}
ScoreDistributionPtr make_lognormal(double mu, double sigma) {
  return std::make_shared<LogNormalScore>(mu, sigma);
}
ScoreDistributionPtr make_beta(double alpha, double beta) {
  return std::make_shared<BetaScore>(alpha, beta);
}
ScoreDistributionPtr make_uniform(double lo, double hi) {
  return std::make_shared<UniformScore>(lo, hi);
}
ScoreDistributionPtr make_discrete(std::vector<double> atoms,
                                   std::vector<double> weights) {
  return std::make_shared<DiscreteScore>(std::move(atoms), std::move(weights));
}
ScoreDistributionPtr make_affine(double c0, double c1,
                                 ScoreDistributionPtr inner) {
  // An order-preserving affine image of a finite-discrete law is just
  // another finite-discrete law; materialize it so step-CDF comparisons are
  // exact at the rounded atom positions (a lazy (t - c0)/c1 inverse can
  // land one ulp below an atom and drop a whole step).
  if (c1 > 0.0 && inner) {
    if (const auto* disc = dynamic_cast<const DiscreteScore*>(inner.get())) {
      std::vector<double> atoms;
      std::vector<double> weights;
      atoms.reserve(disc->atoms().size());
      weights.reserve(disc->atoms().size());
      for (std::size_t i = 0; i < disc->atoms().size(); ++i) {
        const double a = c0 + c1 * disc->atoms()[i];
        if (!atoms.empty() && a == atoms.back()) {
          weights.back() += disc->weights()[i];  // rounded into a collision
        } else {
          atoms.push_back(a);
          weights.push_back(disc->weights()[i]);
        }
      }
      return std::make_shared<DiscreteScore>(std::move(atoms),
                                             std::move(weights));
    }
  }
  return std::make_shared<AffineScore>(c0, c1, std::move(inner));
}

}  // namespace prcurve
