#include "meankit/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace meankit {

namespace {

bool is_constant(std::span<const double> x) {
  return *std::max_element(x.begin(), x.end()) ==
         *std::min_element(x.begin(), x.end());
}

} // namespace

BoundsReport check_mean_bounds(const MeanExpr& expr, const SampleConfig& cfg) {
  BoundsReport report;
  for (const auto& x : sample_vectors(cfg, expr.arity())) {
    const double v = eval_mean(expr, x);
    const double lo = *std::min_element(x.begin(), x.end());
    const double hi = *std::max_element(x.begin(), x.end());
    const double violation = std::max(lo - v, v - hi);
    if (violation > report.max_violation) {
      report.max_violation = violation;
      report.witness = x;
    }
  }
  return report;
}

BoundsReport check_strict_mean(const MeanExpr& expr, const SampleConfig& cfg) {
  BoundsReport report;
  for (const auto& x : sample_vectors(cfg, expr.arity())) {
    if (is_constant(x))
      continue;
    const double v = eval_mean(expr, x);
    const double lo = *std::min_element(x.begin(), x.end());
    const double hi = *std::max_element(x.begin(), x.end());
    // non-strict hit counts as a violation of size 0+; track the worst gap
    const double violation = std::max(lo - v, v - hi);
    if (violation >= 0.0 &&
        (report.witness.empty() || violation > report.max_violation)) {
      report.max_violation = violation;
      report.witness = x;
    }
  }
  return report;
}

SymmetryReport check_symmetric(const MeanExpr& expr, const SampleConfig& cfg,
                               double tol) {
  SymmetryReport report;
  const int p = expr.arity();
  std::vector<int> perm(static_cast<std::size_t>(p));
  for (const auto& x : sample_vectors(cfg, p)) {
    const double base = eval_mean(expr, x);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> y(x.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = x[static_cast<std::size_t>(perm[i])];
      const double dev = rel_err(eval_mean(expr, y), base);
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.witness = x;
        report.permutation = perm;
      }
    }
  }
  report.symmetric = report.max_deviation <= tol;
  return report;
}

MonotonicityReport check_monotone(const MeanExpr& expr, const SampleConfig& cfg,
                                  bool strict) {
  MonotonicityReport report;
  const int p = expr.arity();
  for (const auto& x : sample_vectors(cfg, p)) {
    const double base = eval_mean(expr, x);
    for (int i = 0; i < p; ++i) {
      std::vector<double> y(x.begin(), x.end());
      const double delta = 1e-3 * std::max(1.0, std::abs(y[i]));
      y[static_cast<std::size_t>(i)] += delta;
      if (!cfg.domain.contains(y[static_cast<std::size_t>(i)]))
        continue;
      const double bumped = eval_mean(expr, y);
      const bool ok = strict ? bumped > base
                             : bumped >= base - 1e-12 * std::abs(base);
      if (!ok) {
        report.monotone = false;
        report.witness = x;
        report.coordinate = i;
        return report;
      }
    }
  }
  return report;
}

double contraction_gap(const MeanVector& m, std::span<const double> x) {
  if (is_constant(x))
    throw ConstantInput("contraction gap is undefined on the diagonal");
  const auto y = m.apply(x);
  const double dx = *std::max_element(x.begin(), x.end()) -
                    *std::min_element(x.begin(), x.end());
  const double dy = *std::max_element(y.begin(), y.end()) -
                    *std::min_element(y.begin(), y.end());
  return dx - dy;
}

} // namespace meankit
