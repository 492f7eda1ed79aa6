#include "meankit/iterate.hpp"

#include <algorithm>
#include <cmath>

#include "meankit/eval.hpp"

namespace meankit {

namespace {

double diameter_of(std::span<const double> x) {
  return *std::max_element(x.begin(), x.end()) -
         *std::min_element(x.begin(), x.end());
}

double scale_of(std::span<const double> x) {
  double s = 1.0;
  for (double v : x)
    s = std::max(s, std::abs(v));
  return s;
}

} // namespace

IterationReport iterate_mapping(const MeanVector& m, std::span<const double> x,
                                const IterationConfig& cfg) {
  IterationReport report;
  std::vector<double> cur(x.begin(), x.end());
  if (cfg.keep_trace)
    report.trace.push_back(cur);

  report.diameter = diameter_of(cur);
  int n = 0;
  while (report.diameter > cfg.tol * scale_of(cur) && n < cfg.max_iterations) {
    cur = m.apply(cur);
    ++n;
    if (cfg.keep_trace)
      report.trace.push_back(cur);
    report.diameter = diameter_of(cur);
  }

  report.iterations = n;
  report.converged = report.diameter <= cfg.tol * scale_of(cur);
  report.final_iterate = cur;
  report.limit = (*std::min_element(cur.begin(), cur.end()) +
                  *std::max_element(cur.begin(), cur.end())) /
                 2.0;
  return report;
}

double invariant_mean_value(const MeanVector& m, std::span<const double> x,
                            const IterationConfig& cfg) {
  const auto report = iterate_mapping(m, x, cfg);
  if (!report.converged)
    throw NotConverged("mean-type iteration did not converge in " +
                       std::to_string(cfg.max_iterations) + " iterations");
  return report.limit;
}

ResidualReport check_invariance(const MeanExpr& k, const MeanVector& m,
                                const SampleConfig& cfg) {
  if (k.arity() != m.arity())
    throw ArityMismatch("invariance check: K and M arities differ");
  ResidualReport report;
  for (const auto& x : sample_vectors(cfg, m.arity())) {
    const double kx = eval_mean(k, x);
    const auto mx = m.apply(x);
    const double res = std::abs(eval_mean(k, mx) - kx) /
                       std::max(1.0, std::abs(kx));
    if (res > report.max_residual) {
      report.max_residual = res;
      report.witness = x;
    }
  }
  return report;
}

} // namespace meankit
