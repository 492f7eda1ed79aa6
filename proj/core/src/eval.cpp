#include "meankit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "meankit/complement.hpp"
#include "meankit/hfamily.hpp"

namespace meankit {

double default_tolerance() {
  static const double tol = [] {
    if (const char* s = std::getenv("MEANKIT_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(s, &end);
      if (end != s && v > 0)
        return v;
    }
    return 1e-13;
  }();
  return tol;
}

double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

namespace {

void require_positive(std::span<const double> x) {
  for (double v : x)
    if (!(v > 0.0))
      throw DomainViolation("nonpositive input to a positive-domain mean");
}

double arithmetic_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) /
         static_cast<double>(x.size());
}

double geometric_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x)
    s += std::log(v);
  return std::exp(s / static_cast<double>(x.size()));
}

} // namespace

double eval_mean(const MeanExpr& expr, std::span<const double> x) {
  if (static_cast<int>(x.size()) != expr.arity())
    throw ArityMismatch("input length does not match mean arity");
  if (expr.needs_positive())
    require_positive(x);

  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, MeanExpr::Arithmetic>)
          return arithmetic_of(x);
        else if constexpr (std::is_same_v<T, MeanExpr::Geometric>)
          return geometric_of(x);
        else if constexpr (std::is_same_v<T, MeanExpr::Harmonic>) {
          double s = 0.0;
          for (double v : x)
            s += 1.0 / v;
          return static_cast<double>(x.size()) / s;
        } else if constexpr (std::is_same_v<T, MeanExpr::Power>) {
          if (n.r == 0.0)
            return geometric_of(x); // continuous limit
          double s = 0.0;
          for (double v : x)
            s += std::pow(v, n.r);
          return std::pow(s / static_cast<double>(x.size()), 1.0 / n.r);
        } else if constexpr (std::is_same_v<T, MeanExpr::Min>)
          return *std::min_element(x.begin(), x.end());
        else if constexpr (std::is_same_v<T, MeanExpr::Max>)
          return *std::max_element(x.begin(), x.end());
        else if constexpr (std::is_same_v<T, MeanExpr::Projection>)
          return x[static_cast<std::size_t>(n.index - 1)];
        else if constexpr (std::is_same_v<T, MeanExpr::SubsetArithmetic>) {
          double s = 0.0;
          for (int i : n.subset)
            s += x[static_cast<std::size_t>(i - 1)];
          return s / static_cast<double>(n.subset.size());
        } else if constexpr (std::is_same_v<T, MeanExpr::HFamily>)
          return hfam_eval(expr.arity(), n.alpha, x);
        else if constexpr (std::is_same_v<T, MeanExpr::BetaType>)
          return beta_eval(expr.arity(), x);
        else if constexpr (std::is_same_v<T, MeanExpr::GiniF>) {
          const double e2 = x[1] * x[2] + x[2] * x[0] + x[0] * x[1];
          return e2 / (x[0] + x[1] + x[2]);
        } else {
          IterationConfig cfg;
          cfg.tol = default_tolerance();
          return complement_value(ComplementSpec(*n.k, *n.m, n.subset), x,
                                  cfg);
        }
      },
      expr.node());
}

} // namespace meankit
