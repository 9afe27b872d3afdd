#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid field parameter (D < 2 or not squarefree).
struct InvalidField : Error {
  using Error::Error;
};

// Bad argument to an operation, e.g. a non totally positive element.
struct InvalidArgument : Error {
  using Error::Error;
};

// An exact division inside a recurrence did not come out exact. Never expected;
// it means the recurrence or its inputs are corrupted.
struct DivisibilityViolation : Error {
  using Error::Error;
};

// The brute-force enumerator ran out of its node budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A checked mathematical statement failed on concrete data.
struct AssertionFailure : Error {
  using Error::Error;
};

}  // namespace qpart
