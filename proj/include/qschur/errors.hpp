#ifndef QSCHUR_ERRORS_HPP
#define QSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qschur {

// Caller passed arguments violating a documented precondition.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (flag count, basis size, search box) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic cannot proceed (division by zero, non-integral interpolation).
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qschur

#endif
