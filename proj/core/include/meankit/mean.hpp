#ifndef MEANKIT_MEAN_HPP
#define MEANKIT_MEAN_HPP

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "meankit/domain.hpp"
#include "meankit/errors.hpp"
#include "meankit/rational.hpp"

namespace meankit {

class MeanVector;

/// Algebraic description of a p-variable mean. Immutable after construction;
/// evaluation lives in eval.hpp (Complement nodes delegate to the bisection
/// solver in complement.hpp).
class MeanExpr {
public:
  struct Arithmetic {};
  struct Geometric {};
  struct Harmonic {};
  struct Power {
    double r;
  };
  struct Min {};
  struct Max {};
  struct Projection {
    int index; // 1-based
  };
  struct SubsetArithmetic {
    std::vector<int> subset; // 1-based, nonempty, sorted
  };
  struct HFamily {
    Rational alpha;
  };
  struct BetaType {};
  struct GiniF {};
  struct Complement {
    std::shared_ptr<const MeanExpr> k;
    std::shared_ptr<const MeanVector> m;
    std::vector<int> subset; // 1-based, nonempty, sorted
  };

  using Node = std::variant<Arithmetic, Geometric, Harmonic, Power, Min, Max,
                            Projection, SubsetArithmetic, HFamily, BetaType,
                            GiniF, Complement>;

  static MeanExpr arithmetic(int p) { return MeanExpr(p, Arithmetic{}); }
  static MeanExpr geometric(int p) { return MeanExpr(p, Geometric{}); }
  static MeanExpr harmonic(int p) { return MeanExpr(p, Harmonic{}); }
  static MeanExpr power(int p, double r) { return MeanExpr(p, Power{r}); }
  static MeanExpr minimum(int p) { return MeanExpr(p, Min{}); }
  static MeanExpr maximum(int p) { return MeanExpr(p, Max{}); }
  static MeanExpr projection(int p, int index);
  static MeanExpr subset_arithmetic(int p, std::vector<int> subset);
  static MeanExpr hfamily(int p, Rational alpha) {
    return MeanExpr(p, HFamily{alpha});
  }
  // B_p = H_{p,-1/(p-1)}
  static MeanExpr beta(int p) { return MeanExpr(p, BetaType{}); }
  static MeanExpr gini_f() { return MeanExpr(3, GiniF{}); }
  static MeanExpr complement(MeanExpr k, MeanVector m, std::vector<int> subset);

  int arity() const { return arity_; }
  const Node& node() const { return node_; }

  /// True when every evaluation requires strictly positive inputs.
  bool needs_positive() const;

  std::string describe() const;

private:
  MeanExpr(int p, Node node);

  int arity_;
  Node node_;
};

/// Mean-type mapping: an ordered list of p means of arity p.
class MeanVector {
public:
  explicit MeanVector(std::vector<MeanExpr> means);

  int arity() const { return static_cast<int>(means_.size()); }
  const MeanExpr& operator[](int i) const { return means_[i]; }
  const std::vector<MeanExpr>& means() const { return means_; }

  /// Applies every coordinate mean to x.
  std::vector<double> apply(std::span<const double> x) const;

private:
  std::vector<MeanExpr> means_;
};

/// Validates a 1-based index subset against arity p: nonempty, in range,
/// duplicates removed, returned sorted.
std::vector<int> normalize_subset(std::vector<int> subset, int p);

} // namespace meankit

#endif
