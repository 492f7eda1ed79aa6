#include "meankit/hfamily.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "meankit/errors.hpp"

namespace meankit {

namespace {

void require_positive(std::span<const double> x) {
  for (double v : x)
    if (!(v > 0.0))
      throw DomainViolation("H-family means need positive inputs");
}

} // namespace

double hfam_eval(int p, double alpha, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p)
    throw ArityMismatch("input length does not match p");
  require_positive(x);
  double logsum = 0.0, sum = 0.0;
  for (double v : x) {
    logsum += std::log(v);
    sum += v;
  }
  const double g = std::exp(logsum / p);
  const double a = sum / p;
  // a^alpha * g^(1-alpha)
  return std::exp(alpha * std::log(a) + (1.0 - alpha) * std::log(g));
}

double hfam_eval(int p, const Rational& alpha, std::span<const double> x) {
  return hfam_eval(p, alpha.to_double(), x);
}

double beta_eval(int p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p)
    throw ArityMismatch("input length does not match p");
  require_positive(x);
  double prod_log = 0.0, sum = 0.0;
  for (double v : x) {
    prod_log += std::log(v);
    sum += v;
  }
  // (p x1...xp / (x1+...+xp))^(1/(p-1))
  return std::exp((std::log(static_cast<double>(p)) + prod_log -
                   std::log(sum)) /
                  (p - 1));
}

ExponentVector::ExponentVector(int p_, std::vector<Rational> alphas_)
    : p(p_), alphas(std::move(alphas_)) {
  if (p < 2)
    throw ArityMismatch("exponent vector needs p >= 2");
  if (static_cast<int>(alphas.size()) != p)
    throw ArityMismatch("exponent vector length does not match p");
}

Rational ExponentVector::sum() const {
  Rational s(0);
  for (const auto& a : alphas)
    s = s + a;
  return s;
}

Rational compose_under_G(const ExponentVector& alphas) {
  return alphas.sum() / Rational(alphas.p);
}

Lemma4Report check_lemma4(const ExponentVector& alphas,
                          const SampleConfig& cfg) {
  Lemma4Report report;
  report.zero_sum = alphas.sum() == Rational(0);
  for (const auto& x : sample_vectors(cfg, alphas.p)) {
    std::vector<double> y(x.size());
    for (int i = 0; i < alphas.p; ++i)
      y[static_cast<std::size_t>(i)] =
          hfam_eval(alphas.p, alphas.alphas[static_cast<std::size_t>(i)], x);
    const double gx = hfam_eval(alphas.p, 0.0, x);
    const double gy = hfam_eval(alphas.p, 0.0, y);
    const double res = std::abs(gy - gx) / std::max(1.0, std::abs(gx));
    if (res > report.residual) {
      report.residual = res;
      report.witness = x;
    }
  }
  return report;
}

ExponentVector symbolic_complement(const ExponentVector& alphas,
                                   const std::vector<int>& subset) {
  if (subset.empty())
    throw EmptySubset("symbolic complement needs a nonempty subset");
  if (alphas.sum() != Rational(0))
    throw NonInvariantRoot("exponent vector must sum to zero");
  auto s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.front() < 1 || s.back() > alphas.p)
    throw ArityMismatch("subset index out of range");

  Rational beta(0);
  for (int i : s)
    beta = beta + alphas.alphas[static_cast<std::size_t>(i - 1)];
  beta = beta / Rational(static_cast<std::int64_t>(s.size()));

  auto out = alphas.alphas;
  for (int i : s)
    out[static_cast<std::size_t>(i - 1)] = beta;
  return ExponentVector(alphas.p, std::move(out));
}

SymbolicClosure closure_enumerate_from(const ExponentVector& root,
                                       int max_depth, int budget) {
  if (root.sum() != Rational(0))
    throw NonInvariantRoot("closure root must be a zero-sum exponent vector");

  SymbolicClosure closure{root, {}};
  closure.entries.push_back({root, -1, {}, 0});

  std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, int> seen;
  const auto key_of = [](const ExponentVector& v) {
    std::vector<std::pair<std::int64_t, std::int64_t>> key;
    key.reserve(v.alphas.size());
    for (const auto& a : v.alphas)
      key.emplace_back(a.num(), a.den());
    return key;
  };
  seen.emplace(key_of(root), 0);

  const int p = root.p;
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i))
        s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  std::size_t next = 0;
  while (next < closure.entries.size()) {
    const int id = static_cast<int>(next++);
    if (closure.entries[static_cast<std::size_t>(id)].depth >= max_depth)
      continue;
    for (const auto& s : subsets) {
      const auto& entry = closure.entries[static_cast<std::size_t>(id)];
      auto child = symbolic_complement(entry.vec, s);
      auto key = key_of(child);
      if (seen.contains(key))
        continue;
      if (static_cast<int>(closure.entries.size()) >= budget)
        throw BudgetExceeded("symbolic closure node budget exceeded");
      seen.emplace(std::move(key), static_cast<int>(closure.entries.size()));
      closure.entries.push_back({std::move(child), id, s, entry.depth + 1});
    }
  }
  return closure;
}

SymbolicClosure closure_enumerate(int p, int max_depth, int budget) {
  std::vector<Rational> alphas(static_cast<std::size_t>(p),
                               Rational(-1, p - 1));
  alphas[0] = Rational(1);
  return closure_enumerate_from(ExponentVector(p, std::move(alphas)),
                                max_depth, budget);
}

namespace {

bool denominator_smooth(std::int64_t den, int p) {
  for (std::int64_t q = 2; q <= p; ++q)
    while (den % q == 0)
      den /= q;
  return den == 1;
}

} // namespace

Remark3Report verify_remark3(const SymbolicClosure& closure) {
  Remark3Report report;
  for (const auto& entry : closure.entries)
    for (const auto& a : entry.vec.alphas)
      if (!denominator_smooth(a.den(), entry.vec.p)) {
        report.ok = false;
        report.violator = entry.vec;
        return report;
      }
  return report;
}

} // namespace meankit
