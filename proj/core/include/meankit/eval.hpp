#ifndef MEANKIT_EVAL_HPP
#define MEANKIT_EVAL_HPP

#include <span>

#include "meankit/mean.hpp"

namespace meankit {

/// Default solver tolerance. Honors the MEANKIT_TOL environment variable.
double default_tolerance();

/// Evaluates a mean expression at x (length must equal the expression
/// arity). Complement nodes are solved by bisection at default_tolerance().
double eval_mean(const MeanExpr& expr, std::span<const double> x);

/// Relative error with an absolute floor, the comparison used throughout.
double rel_err(double got, double want);

} // namespace meankit

#endif
