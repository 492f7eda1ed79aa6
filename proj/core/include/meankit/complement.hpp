#ifndef MEANKIT_COMPLEMENT_HPP
#define MEANKIT_COMPLEMENT_HPP

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "meankit/iterate.hpp"
#include "meankit/mean.hpp"

namespace meankit {

using MeanFn = std::function<double(std::span<const double>)>;

/// Inputs for the K-complementary average K_S(M): a continuous strictly
/// monotone mean K, an M it is invariant with respect to, and a nonempty
/// index set S (1-based).
struct ComplementSpec {
  MeanExpr k;
  MeanVector m;
  std::vector<int> subset;

  ComplementSpec(MeanExpr k, MeanVector m, std::vector<int> subset);
};

/// Solves K(T(alpha)) = K(x) for alpha by bisection, where T fills the
/// S-coordinates with alpha and the rest with fixed[i]. The bracket is
/// [lo, hi]; f's direction is detected from the endpoints. Throws
/// NotInvariant when the target lies outside the bracket image beyond
/// 10*tol slack.
double solve_monotone_section(const MeanFn& k, std::span<const double> fixed,
                              std::span<const int> subset, double target,
                              double lo, double hi, double tol);

/// The value K_S(M)(x): the unique alpha in [min_{i in S} M_i(x),
/// max_{i in S} M_i(x)] restoring K's invariance.
double complement_value(const ComplementSpec& spec, std::span<const double> x,
                        const IterationConfig& cfg = {});

/// K_S(M) as an expression node; evaluation delegates to complement_value.
MeanExpr complement_mean(const ComplementSpec& spec);

/// The mean-type mapping K_S(M): coordinate i is the complement mean for
/// i in S and M_i otherwise.
MeanVector build_KS_mapping(const ComplementSpec& spec);

/// The dual K_S*(M): complement of the remaining coordinates with respect
/// to build_KS_mapping(spec). Throws SIsFull when S is all of {1..p}.
MeanExpr dual_complement(const ComplementSpec& spec);

/// General completion: fills the S-coordinates with one unknown alpha and
/// the others with fixed means of x, then solves K(T(alpha)) = K(x) over
/// the full mean range [min x, max x]. Throws NoSolutionInRange when no
/// mean value closes the equation (the "no third mean" phenomenon).
double solve_completion(const MeanExpr& k,
                        const std::map<int, MeanExpr>& fixed,
                        const std::vector<int>& subset,
                        std::span<const double> x,
                        const IterationConfig& cfg = {});

} // namespace meankit

#endif
