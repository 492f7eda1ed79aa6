#ifndef MEANKIT_FUNCEQ_HPP
#define MEANKIT_FUNCEQ_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "meankit/iterate.hpp"
#include "meankit/mean.hpp"

namespace meankit {

/// Small language of continuous scalar functions on (0,inf), the phi of
/// the representation F = phi o K.
struct ScalarFuncSpec {
  struct Identity {};
  struct Log {};
  struct Exp {};
  struct Power {
    double r;
  };
  struct Affine {
    double a, b; // t -> a*t + b
  };
  struct Compose {
    std::vector<ScalarFuncSpec> parts; // applied left to right
  };

  using Node = std::variant<Identity, Log, Exp, Power, Affine, Compose>;
  Node node = Identity{};
};

double eval_scalar(const ScalarFuncSpec& phi, double t);

/// A mean usable as the invariant kernel K: either a closed-form expression
/// or the limit of iterates of a stored mapping.
class KernelMean {
public:
  static KernelMean closed(MeanExpr k);
  static KernelMean iterated(MeanVector m, IterationConfig cfg = {});

  int arity() const;
  double operator()(std::span<const double> x) const;

  const MeanExpr* expr() const; // null in iterated form
  const MeanVector* mapping() const; // null in closed form

private:
  KernelMean() = default;
  std::optional<MeanExpr> expr_;
  std::optional<MeanVector> mapping_;
  IterationConfig cfg_;
};

/// F = phi o K, a solution of F o M = F for every M leaving K invariant.
struct InvariantFunction {
  ScalarFuncSpec phi;
  KernelMean k;

  double operator()(std::span<const double> x) const {
    return eval_scalar(phi, k(x));
  }
};

InvariantFunction build_F(ScalarFuncSpec phi, MeanExpr k);
InvariantFunction build_F(ScalarFuncSpec phi, KernelMean k);

using FuncHandle = std::function<double(std::span<const double>)>;

/// Diagonal restriction t -> F(t,...,t); the phi of any solution.
std::function<double(double)> extract_phi(const FuncHandle& f, int p);

struct SolutionReport {
  double eq2_residual = 0.0; // F o M = F
  std::vector<double> eq2_witness;
  std::map<unsigned, double> eq3_residuals; // subset bitmask -> F o K_S(M) = F
  double representation_residual = 0.0; // F = phi o K with phi = diag F
};

/// Verifies the invariant-type functional equation and the simultaneous
/// system over all nonempty S, plus the phi o K representation, all by
/// sampled relative residuals.
SolutionReport verify_solution(const FuncHandle& f, const MeanVector& m,
                               const KernelMean& k, const SampleConfig& cfg);

} // namespace meankit

#endif
