#ifndef MEANKIT_CLOSURE_HPP
#define MEANKIT_CLOSURE_HPP

#include <vector>

#include "meankit/complement.hpp"
#include "meankit/mean.hpp"

namespace meankit {

/// One mean-type mapping reached by repeated complementary averaging.
/// Fingerprints are per-coordinate evaluations at the shared sample
/// vectors, the general equality test for abstract means.
struct ClosureNode {
  int id = 0;
  int parent = -1; // -1 for the root
  std::vector<int> subset; // generating S (empty for the root)
  int depth = 0;
  MeanVector mapping;
  std::vector<std::vector<double>> fingerprint; // [coordinate][sample]
};

struct ClosureTree {
  std::vector<ClosureNode> nodes;
  // The distinct coordinate means found anywhere in the family, with their
  // fingerprints, deduplicated in discovery order.
  std::vector<MeanExpr> coordinate_means;
  std::vector<std::vector<double>> coordinate_fingerprints;
  std::vector<std::vector<double>> sample_points;
};

/// Breadth-first closure of M under K-complementary averaging over all
/// nonempty subsets, deduplicated by value fingerprint (16 seeded sample
/// vectors, 1e-9 relative). Deterministic: children expand in canonical
/// subset order. Throws NotInvariant when K fails the sampled invariance
/// check on M, BudgetExceeded past node_budget.
ClosureTree closure_generate(const MeanExpr& k, const MeanVector& m,
                             int max_depth, const SampleConfig& cfg,
                             int node_budget = 10000);

} // namespace meankit

#endif
