#ifndef MEANKIT_CHECKS_HPP
#define MEANKIT_CHECKS_HPP

#include <span>
#include <vector>

#include "meankit/eval.hpp"
#include "meankit/mean.hpp"

namespace meankit {

struct BoundsReport {
  double max_violation = 0.0; // 0 for a true mean
  std::vector<double> witness;
};

/// Largest amount by which min/max mean bounds are violated over the sample
/// plan, with a witness vector when positive.
BoundsReport check_mean_bounds(const MeanExpr& expr, const SampleConfig& cfg);

struct SymmetryReport {
  bool symmetric = true;
  double max_deviation = 0.0;
  std::vector<double> witness;
  std::vector<int> permutation; // 0-based, applied to the witness
};

SymmetryReport check_symmetric(const MeanExpr& expr, const SampleConfig& cfg,
                               double tol = 1e-10);

struct MonotonicityReport {
  bool monotone = true;
  std::vector<double> witness;
  int coordinate = -1; // 0-based coordinate of the failing bump
};

/// Sampled coordinate-bump monotonicity check. With strict=true a bump must
/// strictly increase the value.
MonotonicityReport check_monotone(const MeanExpr& expr, const SampleConfig& cfg,
                                  bool strict = false);

/// Sampled strict-mean check: min x < M(x) < max x on nonconstant samples.
BoundsReport check_strict_mean(const MeanExpr& expr, const SampleConfig& cfg);

/// (max x - min x) - (max M(x) - min M(x)); positive certifies the
/// contraction hypothesis at x. Throws ConstantInput on the diagonal.
double contraction_gap(const MeanVector& m, std::span<const double> x);

} // namespace meankit

#endif
