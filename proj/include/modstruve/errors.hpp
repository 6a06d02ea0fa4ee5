#pragma once

#include <stdexcept>
#include <string>

namespace modstruve {

/// Argument outside the mathematical domain of an operation (x <= 0, nu too small, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument inside the domain but outside what an evaluator supports (x > 50 for series).
class range_error : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Series did not meet its stopping rule within the term budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Malformed verification configuration (grid spec, case names, formats).
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace modstruve
