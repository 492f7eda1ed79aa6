#include "meankit/closure.hpp"

#include <algorithm>
#include <cmath>

#include "meankit/eval.hpp"

namespace meankit {

namespace {

constexpr int kFingerprintSamples = 16;
constexpr double kFingerprintTol = 1e-9;

bool rows_close(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (rel_err(a[i], b[i]) > kFingerprintTol)
      return false;
  return true;
}

bool fingerprints_close(const std::vector<std::vector<double>>& a,
                        const std::vector<std::vector<double>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!rows_close(a[i], b[i]))
      return false;
  return true;
}

std::vector<int> mask_to_subset(unsigned mask, int p) {
  std::vector<int> s;
  for (int i = 0; i < p; ++i)
    if (mask & (1u << i))
      s.push_back(i + 1);
  return s;
}

} // namespace

ClosureTree closure_generate(const MeanExpr& k, const MeanVector& m,
                             int max_depth, const SampleConfig& cfg,
                             int node_budget) {
  const int p = m.arity();
  if (k.arity() != p)
    throw ArityMismatch("closure: K and M arities differ");

  const auto inv = check_invariance(k, m, cfg);
  if (inv.max_residual > 1e-8)
    throw NotInvariant("K is not invariant with respect to M (residual " +
                       std::to_string(inv.max_residual) + ")");

  ClosureTree tree;
  SampleConfig fp_cfg = cfg;
  fp_cfg.count = kFingerprintSamples;
  tree.sample_points = sample_vectors(fp_cfg, p);

  std::vector<double> k_at_samples;
  k_at_samples.reserve(tree.sample_points.size());
  for (const auto& x : tree.sample_points)
    k_at_samples.push_back(eval_mean(k, x));

  const MeanFn kfn = [&k](std::span<const double> x) {
    return eval_mean(k, x);
  };

  // root fingerprint by direct evaluation
  {
    ClosureNode root{0, -1, {}, 0, m, {}};
    root.fingerprint.resize(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
      for (const auto& x : tree.sample_points)
        root.fingerprint[static_cast<std::size_t>(i)].push_back(
            eval_mean(m[i], x));
    tree.nodes.push_back(std::move(root));
  }

  // subset expansion order: by size, then by mask
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << p); ++mask)
    masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  const double tol = default_tolerance();
  std::size_t next = 0;
  while (next < tree.nodes.size()) {
    const int node_id = static_cast<int>(next++);
    if (tree.nodes[static_cast<std::size_t>(node_id)].depth >= max_depth)
      continue;
    for (unsigned mask : masks) {
      const auto& parent = tree.nodes[static_cast<std::size_t>(node_id)];
      const auto subset = mask_to_subset(mask, p);

      // child fingerprint: one bisection per sample, reusing the parent's
      // coordinate values as the fixed entries of T
      std::vector<std::vector<double>> fp = parent.fingerprint;
      const std::size_t ns = tree.sample_points.size();
      for (std::size_t j = 0; j < ns; ++j) {
        std::vector<double> fixed(static_cast<std::size_t>(p));
        double lo = parent.fingerprint[static_cast<std::size_t>(
            subset.front() - 1)][j];
        double hi = lo;
        for (int i = 0; i < p; ++i)
          fixed[static_cast<std::size_t>(i)] =
              parent.fingerprint[static_cast<std::size_t>(i)][j];
        for (int i : subset) {
          const double v = parent.fingerprint[static_cast<std::size_t>(i - 1)][j];
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        const double alpha = solve_monotone_section(
            kfn, fixed, subset, k_at_samples[j], lo, hi, tol);
        for (int i : subset)
          fp[static_cast<std::size_t>(i - 1)][j] = alpha;
      }

      bool seen = false;
      for (const auto& node : tree.nodes)
        if (fingerprints_close(node.fingerprint, fp)) {
          seen = true;
          break;
        }
      if (seen)
        continue;

      if (static_cast<int>(tree.nodes.size()) >= node_budget)
        throw BudgetExceeded("closure node budget exceeded");

      ClosureNode child{
          static_cast<int>(tree.nodes.size()),
          node_id,
          subset,
          parent.depth + 1,
          build_KS_mapping(ComplementSpec(k, parent.mapping, subset)),
          std::move(fp)};
      tree.nodes.push_back(std::move(child));
    }
  }

  // distinct coordinate means across the family
  for (const auto& node : tree.nodes)
    for (int i = 0; i < p; ++i) {
      const auto& row = node.fingerprint[static_cast<std::size_t>(i)];
      bool seen = false;
      for (const auto& existing : tree.coordinate_fingerprints)
        if (rows_close(existing, row)) {
          seen = true;
          break;
        }
      if (!seen) {
        tree.coordinate_fingerprints.push_back(row);
        tree.coordinate_means.push_back(node.mapping[i]);
      }
    }

  return tree;
}

} // namespace meankit
