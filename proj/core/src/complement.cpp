#include "meankit/complement.hpp"

#include <algorithm>
#include <cmath>

#include "meankit/eval.hpp"

namespace meankit {

ComplementSpec::ComplementSpec(MeanExpr k_, MeanVector m_,
                               std::vector<int> subset_)
    : k(std::move(k_)), m(std::move(m_)),
      subset(normalize_subset(std::move(subset_), m.arity())) {
  if (k.arity() != m.arity())
    throw ArityMismatch("complement spec: K and M arities differ");
}

double solve_monotone_section(const MeanFn& k, std::span<const double> fixed,
                              std::span<const int> subset, double target,
                              double lo, double hi, double tol) {
  std::vector<double> t(fixed.begin(), fixed.end());
  const auto f = [&](double alpha) {
    for (int i : subset)
      t[static_cast<std::size_t>(i - 1)] = alpha;
    return k(t);
  };

  const double width_tol = tol * std::max({1.0, std::abs(lo), std::abs(hi)});
  const double slack = 10.0 * tol * std::max(1.0, std::abs(target));
  if (hi - lo <= width_tol) {
    // degenerate bracket: the only candidate must still hit the target
    const double mid = 0.5 * (lo + hi);
    if (std::abs(f(mid) - target) > slack)
      throw NotInvariant("bracket does not contain the target value");
    return mid;
  }

  double flo = f(lo);
  double fhi = f(hi);
  const bool increasing = fhi >= flo;
  if (!increasing) {
    std::swap(flo, fhi);
  }
  if (flo > target + slack || fhi < target - slack)
    throw NotInvariant("bracket does not contain the target value");

  double a = lo, b = hi;
  while (b - a > width_tol) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (std::abs(fm - target) <= tol * std::max(1.0, std::abs(target)))
      return mid;
    const bool below = increasing ? fm < target : fm > target;
    if (below)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

namespace {

MeanFn as_fn(const MeanExpr& expr) {
  return [expr](std::span<const double> x) { return eval_mean(expr, x); };
}

} // namespace

double complement_value(const ComplementSpec& spec, std::span<const double> x,
                        const IterationConfig& cfg) {
  const auto mx = spec.m.apply(x);
  double lo = mx[static_cast<std::size_t>(spec.subset.front() - 1)];
  double hi = lo;
  for (int i : spec.subset) {
    const double v = mx[static_cast<std::size_t>(i - 1)];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double target = eval_mean(spec.k, x);
  return solve_monotone_section(as_fn(spec.k), mx, spec.subset, target, lo, hi,
                                cfg.tol);
}

MeanExpr complement_mean(const ComplementSpec& spec) {
  return MeanExpr::complement(spec.k, spec.m, spec.subset);
}

MeanVector build_KS_mapping(const ComplementSpec& spec) {
  const MeanExpr ks = complement_mean(spec);
  std::vector<MeanExpr> coords;
  coords.reserve(static_cast<std::size_t>(spec.m.arity()));
  for (int i = 1; i <= spec.m.arity(); ++i) {
    const bool in_s = std::binary_search(spec.subset.begin(),
                                         spec.subset.end(), i);
    coords.push_back(in_s ? ks : spec.m[i - 1]);
  }
  return MeanVector(std::move(coords));
}

MeanExpr dual_complement(const ComplementSpec& spec) {
  const int p = spec.m.arity();
  std::vector<int> rest;
  for (int i = 1; i <= p; ++i)
    if (!std::binary_search(spec.subset.begin(), spec.subset.end(), i))
      rest.push_back(i);
  if (rest.empty())
    throw SIsFull("dual complement needs S different from {1..p}");
  return MeanExpr::complement(spec.k, build_KS_mapping(spec), std::move(rest));
}

double solve_completion(const MeanExpr& k,
                        const std::map<int, MeanExpr>& fixed,
                        const std::vector<int>& subset,
                        std::span<const double> x,
                        const IterationConfig& cfg) {
  const int p = k.arity();
  if (static_cast<int>(x.size()) != p)
    throw ArityMismatch("input length does not match K arity");
  const auto s = normalize_subset(subset, p);

  std::vector<double> t(x.size(), 0.0);
  for (int i = 1; i <= p; ++i) {
    if (std::binary_search(s.begin(), s.end(), i))
      continue;
    const auto it = fixed.find(i);
    if (it == fixed.end())
      throw ArityMismatch("coordinate " + std::to_string(i) +
                          " is neither fixed nor in S");
    t[static_cast<std::size_t>(i - 1)] = eval_mean(it->second, x);
  }

  // a completing mean can take any value in [min x, max x]
  const double lo = *std::min_element(x.begin(), x.end());
  const double hi = *std::max_element(x.begin(), x.end());
  const double target = eval_mean(k, x);
  try {
    return solve_monotone_section(as_fn(k), t, s, target, lo, hi, cfg.tol);
  } catch (const NotInvariant&) {
    throw NoSolutionInRange("no mean value in [min x, max x] completes the "
                            "mapping at this point");
  }
}

} // namespace meankit
