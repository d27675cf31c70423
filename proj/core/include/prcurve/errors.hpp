#ifndef PRCURVE_ERRORS_HPP_
#define PRCURVE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prcurve {

// Requested operation is not defined for the given object, e.g. the density
// of a discrete score law.
class UnsupportedOperationError : public std::logic_error {
 public:
  explicit UnsupportedOperationError(const std::string& what)
      : std::logic_error(what) {}
};

// sigma^2(x) = 0: the sqrt(n)-standardized estimator has no nondegenerate
// Gaussian limit, so a normal approximation must not be formed.
class DegenerateLimitError : public std::runtime_error {
 public:
  explicit DegenerateLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// sigma^2(x) = +inf.
class UnboundedVarianceError : public std::runtime_error {
 public:
  explicit UnboundedVarianceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Neither ordering required by a separation construction holds.
class NotApplicableError : public std::runtime_error {
 public:
  explicit NotApplicableError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed text input (CSV row, config file); carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace prcurve

#endif  // PRCURVE_ERRORS_HPP_
