#pragma once

#include <stdexcept>
#include <string>

namespace hmkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Raised when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hmkit
