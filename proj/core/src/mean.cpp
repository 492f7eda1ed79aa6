#include "meankit/mean.hpp"

#include "meankit/eval.hpp"

#include <algorithm>
#include <utility>

namespace meankit {

std::vector<int> normalize_subset(std::vector<int> subset, int p) {
  if (subset.empty())
    throw EmptySubset("index set must be nonempty");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.front() < 1 || subset.back() > p)
    throw ArityMismatch("subset index out of range 1.." + std::to_string(p));
  return subset;
}

MeanExpr::MeanExpr(int p, Node node) : arity_(p), node_(std::move(node)) {
  if (p < 2)
    throw ArityMismatch("mean arity must be at least 2");
}

MeanExpr MeanExpr::projection(int p, int index) {
  if (index < 1 || index > p)
    throw ArityMismatch("projection index out of range");
  return MeanExpr(p, Projection{index});
}

MeanExpr MeanExpr::subset_arithmetic(int p, std::vector<int> subset) {
  return MeanExpr(p, SubsetArithmetic{normalize_subset(std::move(subset), p)});
}

MeanExpr MeanExpr::complement(MeanExpr k, MeanVector m,
                              std::vector<int> subset) {
  const int p = m.arity();
  if (k.arity() != p)
    throw ArityMismatch("complement: K and M arities differ");
  auto s = normalize_subset(std::move(subset), p);
  return MeanExpr(p, Complement{std::make_shared<const MeanExpr>(std::move(k)),
                                std::make_shared<const MeanVector>(std::move(m)),
                                std::move(s)});
}

bool MeanExpr::needs_positive() const {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Geometric> ||
                      std::is_same_v<T, Harmonic> ||
                      std::is_same_v<T, Power> ||
                      std::is_same_v<T, HFamily> ||
                      std::is_same_v<T, BetaType> ||
                      std::is_same_v<T, GiniF>)
          return true;
        else if constexpr (std::is_same_v<T, Complement>) {
          if (n.k->needs_positive())
            return true;
          for (const auto& mi : n.m->means())
            if (mi.needs_positive())
              return true;
          return false;
        } else
          return false;
      },
      node_);
}

std::string MeanExpr::describe() const {
  return std::visit(
      [this](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Arithmetic>)
          return "A";
        else if constexpr (std::is_same_v<T, Geometric>)
          return "G";
        else if constexpr (std::is_same_v<T, Harmonic>)
          return "H";
        else if constexpr (std::is_same_v<T, Power>)
          return "P[" + std::to_string(n.r) + "]";
        else if constexpr (std::is_same_v<T, Min>)
          return "min";
        else if constexpr (std::is_same_v<T, Max>)
          return "max";
        else if constexpr (std::is_same_v<T, Projection>)
          return "pi" + std::to_string(n.index);
        else if constexpr (std::is_same_v<T, SubsetArithmetic>) {
          std::string s = "A{";
          for (std::size_t i = 0; i < n.subset.size(); ++i)
            s += (i ? "," : "") + std::to_string(n.subset[i]);
          return s + "}";
        } else if constexpr (std::is_same_v<T, HFamily>)
          return "H[" + n.alpha.str() + "]";
        else if constexpr (std::is_same_v<T, BetaType>)
          return "B" + std::to_string(arity_);
        else if constexpr (std::is_same_v<T, GiniF>)
          return "F";
        else {
          std::string s = n.k->describe() + "_{";
          for (std::size_t i = 0; i < n.subset.size(); ++i)
            s += (i ? "," : "") + std::to_string(n.subset[i]);
          return s + "}(...)";
        }
      },
      node_);
}

MeanVector::MeanVector(std::vector<MeanExpr> means) : means_(std::move(means)) {
  if (means_.size() < 2)
    throw ArityMismatch("mean-type mapping needs at least 2 coordinates");
  const int p = static_cast<int>(means_.size());
  for (const auto& m : means_)
    if (m.arity() != p)
      throw ArityMismatch("coordinate mean arity does not match mapping size");
}

std::vector<double> MeanVector::apply(std::span<const double> x) const {
  std::vector<double> y(means_.size());
  for (std::size_t i = 0; i < means_.size(); ++i)
    y[i] = eval_mean(means_[i], x);
  return y;
}

} // namespace meankit
