#ifndef MEANKIT_HFAMILY_HPP
#define MEANKIT_HFAMILY_HPP

#include <optional>
#include <span>
#include <vector>

#include "meankit/domain.hpp"
#include "meankit/rational.hpp"

namespace meankit {

/// H_{p,alpha}(x) = (x_1...x_p)^{(1-alpha)/p} * ((x_1+...+x_p)/p)^alpha,
/// the geometric-arithmetic blend a^alpha g^{1-alpha}.
double hfam_eval(int p, const Rational& alpha, std::span<const double> x);
double hfam_eval(int p, double alpha, std::span<const double> x);

/// Beta-type mean B_p(x) = (p x_1...x_p / (x_1+...+x_p))^{1/(p-1)},
/// which equals H_{p,-1/(p-1)}.
double beta_eval(int p, std::span<const double> x);

/// Exponent vector (alpha_1,...,alpha_p) encoding the mean-type mapping
/// (H_{p,alpha_1},...,H_{p,alpha_p}). Coordinate-ordered: permutations are
/// distinct mappings.
struct ExponentVector {
  int p = 2;
  std::vector<Rational> alphas;

  ExponentVector(int p, std::vector<Rational> alphas);

  Rational sum() const;
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.alphas == b.alphas;
  }
};

/// Exponent of the composition G o (H_{alpha_1},...,H_{alpha_p}) =
/// H_{(alpha_1+...+alpha_p)/p}, exactly.
Rational compose_under_G(const ExponentVector& alphas);

struct Lemma4Report {
  bool zero_sum = false; // symbolic verdict
  double residual = 0.0; // numeric invariance residual of G
  std::vector<double> witness;
};

/// G is invariant under the mapping iff the exponents sum to zero; returns
/// both the symbolic verdict and the sampled residual so tests can confirm
/// they agree.
Lemma4Report check_lemma4(const ExponentVector& alphas,
                          const SampleConfig& cfg);

/// Replaces the S-entries by their average beta = (1/|S|) sum_{i in S}
/// alpha_i, the closed form of the G-complementary average inside the
/// H-family. Requires a zero-sum input. S is 1-based.
ExponentVector symbolic_complement(const ExponentVector& alphas,
                                   const std::vector<int>& subset);

struct SymbolicClosure {
  struct Entry {
    ExponentVector vec;
    int parent = -1;
    std::vector<int> subset; // generating S (empty for the root)
    int depth = 0;
  };
  ExponentVector root;
  std::vector<Entry> entries; // entries[0] is the root
};

/// Exact BFS closure from the given zero-sum root over all nonempty
/// subsets, deduplicated on exponent vectors.
SymbolicClosure closure_enumerate_from(const ExponentVector& root,
                                       int max_depth, int budget = 10000);

/// Closure of (A, B_p, ..., B_p) under G: root (1, -1/(p-1), ..., -1/(p-1)).
SymbolicClosure closure_enumerate(int p, int max_depth, int budget = 10000);

struct Remark3Report {
  bool ok = true;
  std::optional<ExponentVector> violator;
};

/// Every denominator in the closure must factor over primes <= p.
Remark3Report verify_remark3(const SymbolicClosure& closure);

} // namespace meankit

#endif
