#ifndef MEANKIT_ERRORS_HPP
#define MEANKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace meankit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct DomainViolation : Error {
  using Error::Error;
};

// contraction_gap on a constant vector
struct ConstantInput : Error {
  using Error::Error;
};

// bisection bracket does not contain the target: K is not M-invariant at x
struct NotInvariant : Error {
  using Error::Error;
};

// solve_completion: no mean value in [min x, max x] closes the equation
struct NoSolutionInRange : Error {
  using Error::Error;
};

struct NotConverged : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct EmptySubset : Error {
  using Error::Error;
};

struct SIsFull : Error {
  using Error::Error;
};

// symbolic_complement requires a zero-sum exponent vector
struct NonInvariantRoot : Error {
  using Error::Error;
};

struct ArithmeticOverflow : Error {
  using Error::Error;
};

} // namespace meankit

#endif
