#include "meankit/funceq.hpp"

#include <algorithm>
#include <cmath>

#include "meankit/complement.hpp"
#include "meankit/eval.hpp"

namespace meankit {

double eval_scalar(const ScalarFuncSpec& phi, double t) {
  return std::visit(
      [t](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ScalarFuncSpec::Identity>)
          return t;
        else if constexpr (std::is_same_v<T, ScalarFuncSpec::Log>) {
          if (!(t > 0))
            throw DomainViolation("log of a nonpositive value");
          return std::log(t);
        } else if constexpr (std::is_same_v<T, ScalarFuncSpec::Exp>)
          return std::exp(t);
        else if constexpr (std::is_same_v<T, ScalarFuncSpec::Power>) {
          if (!(t > 0))
            throw DomainViolation("power of a nonpositive value");
          return std::pow(t, n.r);
        } else if constexpr (std::is_same_v<T, ScalarFuncSpec::Affine>)
          return n.a * t + n.b;
        else {
          double v = t;
          for (const auto& part : n.parts)
            v = eval_scalar(part, v);
          return v;
        }
      },
      phi.node);
}

KernelMean KernelMean::closed(MeanExpr k) {
  KernelMean km;
  km.expr_ = std::move(k);
  return km;
}

KernelMean KernelMean::iterated(MeanVector m, IterationConfig cfg) {
  KernelMean km;
  km.mapping_ = std::move(m);
  km.cfg_ = cfg;
  return km;
}

int KernelMean::arity() const {
  return expr_ ? expr_->arity() : mapping_->arity();
}

double KernelMean::operator()(std::span<const double> x) const {
  if (expr_)
    return eval_mean(*expr_, x);
  return invariant_mean_value(*mapping_, x, cfg_);
}

const MeanExpr* KernelMean::expr() const {
  return expr_ ? &*expr_ : nullptr;
}

const MeanVector* KernelMean::mapping() const {
  return mapping_ ? &*mapping_ : nullptr;
}

InvariantFunction build_F(ScalarFuncSpec phi, MeanExpr k) {
  return InvariantFunction{std::move(phi), KernelMean::closed(std::move(k))};
}

InvariantFunction build_F(ScalarFuncSpec phi, KernelMean k) {
  return InvariantFunction{std::move(phi), std::move(k)};
}

std::function<double(double)> extract_phi(const FuncHandle& f, int p) {
  return [f, p](double t) {
    const std::vector<double> diag(static_cast<std::size_t>(p), t);
    return f(diag);
  };
}

SolutionReport verify_solution(const FuncHandle& f, const MeanVector& m,
                               const KernelMean& k, const SampleConfig& cfg) {
  const int p = m.arity();
  if (k.arity() != p)
    throw ArityMismatch("verify_solution: K and M arities differ");

  SolutionReport report;
  const auto samples = sample_vectors(cfg, p);
  const auto phi = extract_phi(f, p);
  const double tol = default_tolerance();

  const MeanFn kfn = [&k](std::span<const double> x) { return k(x); };

  for (unsigned mask = 1; mask < (1u << p); ++mask)
    report.eq3_residuals[mask] = 0.0;

  for (const auto& x : samples) {
    const double fx = f(x);
    const double scale = std::max(1.0, std::abs(fx));

    const auto mx = m.apply(x);
    const double eq2 = std::abs(f(mx) - fx) / scale;
    if (eq2 > report.eq2_residual) {
      report.eq2_residual = eq2;
      report.eq2_witness = x;
    }

    const double kx = k(x);
    report.representation_residual = std::max(
        report.representation_residual, std::abs(fx - phi(kx)) / scale);

    // F o K_S(M) = F for every nonempty S, with K_S(M)(x) solved on the fly
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
      std::vector<int> subset;
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (int i = 0; i < p; ++i)
        if (mask & (1u << i)) {
          subset.push_back(i + 1);
          const double v = mx[static_cast<std::size_t>(i)];
          lo = first ? v : std::min(lo, v);
          hi = first ? v : std::max(hi, v);
          first = false;
        }
      const double alpha =
          solve_monotone_section(kfn, mx, subset, kx, lo, hi, tol);
      std::vector<double> y = mx;
      for (int i : subset)
        y[static_cast<std::size_t>(i - 1)] = alpha;
      const double eq3 = std::abs(f(y) - fx) / scale;
      auto& slot = report.eq3_residuals[mask];
      slot = std::max(slot, eq3);
    }
  }
  return report;
}

} // namespace meankit
