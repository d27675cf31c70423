#ifndef PRCURVE_EXTENDED_REAL_HPP_
#define PRCURVE_EXTENDED_REAL_HPP_

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace prcurve {

// A point on the extended real line [-inf, +inf].
//
// Support endpoints and generalized-inverse quantiles may be infinite, so
// they are carried as ExtendedReal rather than as large finite stand-ins.
// No arithmetic operators are provided: code that consumes a possibly
// infinite value has to branch (is_neg_infinity / is_pos_infinity) or call
// finite(), which refuses to hand out an infinity.
class ExtendedReal {
 public:
  ExtendedReal() : value_(0.0) {}
  ExtendedReal(double value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(value)) {
      throw std::invalid_argument("ExtendedReal: NaN is not an extended real");
    }
  }

  static ExtendedReal neg_infinity() {
    return ExtendedReal(-std::numeric_limits<double>::infinity());
  }
  static ExtendedReal pos_infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return std::isfinite(value_); }
  bool is_neg_infinity() const { return std::isinf(value_) && value_ < 0; }
  bool is_pos_infinity() const { return std::isinf(value_) && value_ > 0; }

  // The finite value; throws if this is +-infinity.
  double finite() const {
    if (!is_finite()) {
      throw std::logic_error("ExtendedReal: finite() called on an infinity");
    }
    return value_;
  }

  // The underlying IEEE double, possibly +-infinity. Intended for ordering,
  // printing and explicit branches, not for arithmetic.
  double ieee() const { return value_; }

  friend auto operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& v) {
    if (v.is_neg_infinity()) return os << "-inf";
    if (v.is_pos_infinity()) return os << "+inf";
    return os << v.value_;
  }

 private:
  double value_;
};

}  // namespace prcurve

#endif  // PRCURVE_EXTENDED_REAL_HPP_
