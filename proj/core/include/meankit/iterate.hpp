#ifndef MEANKIT_ITERATE_HPP
#define MEANKIT_ITERATE_HPP

#include <span>
#include <vector>

#include "meankit/mean.hpp"

namespace meankit {

struct IterationConfig {
  double tol = 1e-13; // relative diameter tolerance
  int max_iterations = 10000;
  bool keep_trace = false;
};

struct IterationReport {
  double limit = 0.0;
  std::vector<double> final_iterate;
  int iterations = 0;
  bool converged = false;
  double diameter = 0.0;
  std::vector<std::vector<double>> trace; // only when keep_trace
};

/// Iterates M^n(x) until the iterate diameter falls below
/// tol * max(1, |values|) or max_iterations is hit (converged=false then).
IterationReport iterate_mapping(const MeanVector& m, std::span<const double> x,
                                const IterationConfig& cfg = {});

/// Value of the unique M-invariant mean at x. Throws NotConverged when the
/// iteration does not settle within the budget.
double invariant_mean_value(const MeanVector& m, std::span<const double> x,
                            const IterationConfig& cfg = {});

struct ResidualReport {
  double max_residual = 0.0;
  std::vector<double> witness;
};

/// max over samples of |K(M(x)) - K(x)| / max(1, |K(x)|).
ResidualReport check_invariance(const MeanExpr& k, const MeanVector& m,
                                const SampleConfig& cfg);

} // namespace meankit

#endif
