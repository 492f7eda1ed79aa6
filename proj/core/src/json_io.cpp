#include "meankit/json_io.hpp"

#include <sstream>

namespace meankit {

json rational_to_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  return Rational(j.at("num").get<std::int64_t>(),
                  j.at("den").get<std::int64_t>());
}

json mean_to_json(const MeanExpr& expr) {
  return std::visit(
      [&](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, MeanExpr::Arithmetic>)
          return json{{"kind", "arithmetic"}};
        else if constexpr (std::is_same_v<T, MeanExpr::Geometric>)
          return json{{"kind", "geometric"}};
        else if constexpr (std::is_same_v<T, MeanExpr::Harmonic>)
          return json{{"kind", "harmonic"}};
        else if constexpr (std::is_same_v<T, MeanExpr::Power>)
          return json{{"kind", "power"}, {"r", n.r}};
        else if constexpr (std::is_same_v<T, MeanExpr::Min>)
          return json{{"kind", "min"}};
        else if constexpr (std::is_same_v<T, MeanExpr::Max>)
          return json{{"kind", "max"}};
        else if constexpr (std::is_same_v<T, MeanExpr::Projection>)
          return json{{"kind", "projection"}, {"i", n.index}};
        else if constexpr (std::is_same_v<T, MeanExpr::SubsetArithmetic>)
          return json{{"kind", "subset_arithmetic"}, {"S", n.subset}};
        else if constexpr (std::is_same_v<T, MeanExpr::HFamily>)
          return json{{"kind", "hfamily"},
                      {"alpha", rational_to_json(n.alpha)}};
        else if constexpr (std::is_same_v<T, MeanExpr::BetaType>)
          return json{{"kind", "beta"}};
        else if constexpr (std::is_same_v<T, MeanExpr::GiniF>)
          return json{{"kind", "gini_f"}};
        else
          return json{{"kind", "complement"},
                      {"K", mean_to_json(*n.k)},
                      {"M", mapping_to_json(*n.m)},
                      {"S", n.subset}};
      },
      expr.node());
}

MeanExpr mean_from_json(const json& j, int p) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "arithmetic")
    return MeanExpr::arithmetic(p);
  if (kind == "geometric")
    return MeanExpr::geometric(p);
  if (kind == "harmonic")
    return MeanExpr::harmonic(p);
  if (kind == "power")
    return MeanExpr::power(p, j.at("r").get<double>());
  if (kind == "min")
    return MeanExpr::minimum(p);
  if (kind == "max")
    return MeanExpr::maximum(p);
  if (kind == "projection")
    return MeanExpr::projection(p, j.at("i").get<int>());
  if (kind == "subset_arithmetic")
    return MeanExpr::subset_arithmetic(p, j.at("S").get<std::vector<int>>());
  if (kind == "hfamily")
    return MeanExpr::hfamily(p, rational_from_json(j.at("alpha")));
  if (kind == "beta")
    return MeanExpr::beta(p);
  if (kind == "gini_f")
    return MeanExpr::gini_f();
  if (kind == "complement") {
    auto m = mapping_from_json(j.at("M"));
    auto k = mean_from_json(j.at("K"), m.arity());
    return MeanExpr::complement(std::move(k), std::move(m),
                                j.at("S").get<std::vector<int>>());
  }
  throw Error("unknown mean kind: " + kind);
}

json mapping_to_json(const MeanVector& m) {
  json arr = json::array();
  for (const auto& mi : m.means())
    arr.push_back(mean_to_json(mi));
  return arr;
}

MeanVector mapping_from_json(const json& j) {
  if (!j.is_array())
    throw Error("mean-type mapping must be a JSON array");
  const int p = static_cast<int>(j.size());
  std::vector<MeanExpr> means;
  means.reserve(j.size());
  for (const auto& jm : j)
    means.push_back(mean_from_json(jm, p));
  return MeanVector(std::move(means));
}

json report_to_json(const IterationReport& report) {
  json j{{"limit", report.limit},
         {"iterations", report.iterations},
         {"converged", report.converged},
         {"diameter", report.diameter},
         {"final_iterate", report.final_iterate}};
  if (!report.trace.empty())
    j["trace"] = report.trace;
  return j;
}

std::string trace_to_csv(const IterationReport& report) {
  std::ostringstream out;
  out.precision(17);
  const auto& rows =
      report.trace.empty()
          ? std::vector<std::vector<double>>{report.final_iterate}
          : report.trace;
  out << "iteration";
  for (std::size_t i = 0; i < rows.front().size(); ++i)
    out << ",x" << (i + 1);
  out << "\n";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out << n;
    for (double v : rows[n])
      out << "," << v;
    out << "\n";
  }
  return out.str();
}

json exponent_vector_to_json(const ExponentVector& v) {
  json alphas = json::array();
  for (const auto& a : v.alphas)
    alphas.push_back(rational_to_json(a));
  return json{{"p", v.p}, {"alphas", alphas}};
}

ExponentVector exponent_vector_from_json(const json& j) {
  const int p = j.at("p").get<int>();
  std::vector<Rational> alphas;
  for (const auto& ja : j.at("alphas"))
    alphas.push_back(rational_from_json(ja));
  return ExponentVector(p, std::move(alphas));
}

json closure_to_json(const ClosureTree& tree) {
  json nodes = json::array();
  for (const auto& node : tree.nodes) {
    json coords = json::array();
    for (const auto& mi : node.mapping.means())
      coords.push_back(mean_to_json(mi));
    nodes.push_back(json{{"id", node.id},
                         {"parent", node.parent},
                         {"S", node.subset},
                         {"depth", node.depth},
                         {"coordinates", coords},
                         {"fingerprint", node.fingerprint}});
  }
  json k0 = json::array();
  for (std::size_t i = 0; i < tree.coordinate_means.size(); ++i)
    k0.push_back(json{{"mean", mean_to_json(tree.coordinate_means[i])},
                      {"fingerprint", tree.coordinate_fingerprints[i]}});
  return json{{"nodes", nodes},
              {"coordinate_means", k0},
              {"sample_points", tree.sample_points}};
}

namespace {

std::string subset_label(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i)
    s += (i ? "," : "") + std::to_string(subset[i]);
  return s + "}";
}

} // namespace

std::string closure_to_dot(const ClosureTree& tree) {
  std::ostringstream out;
  out << "digraph closure {\n";
  for (const auto& node : tree.nodes) {
    out << "  n" << node.id << " [label=\"";
    for (int i = 0; i < node.mapping.arity(); ++i)
      out << (i ? "," : "(") << node.mapping[i].describe();
    out << ")\"];\n";
    if (node.parent >= 0)
      out << "  n" << node.parent << " -> n" << node.id << " [label=\""
          << subset_label(node.subset) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json symbolic_closure_to_json(const SymbolicClosure& closure) {
  json entries = json::array();
  for (std::size_t i = 0; i < closure.entries.size(); ++i) {
    const auto& e = closure.entries[i];
    entries.push_back(json{{"id", static_cast<int>(i)},
                           {"parent", e.parent},
                           {"S", e.subset},
                           {"depth", e.depth},
                           {"vector", exponent_vector_to_json(e.vec)}});
  }
  return json{{"root", exponent_vector_to_json(closure.root)},
              {"entries", entries}};
}

std::string symbolic_closure_to_dot(const SymbolicClosure& closure) {
  std::ostringstream out;
  out << "digraph hfam_closure {\n";
  for (std::size_t i = 0; i < closure.entries.size(); ++i) {
    const auto& e = closure.entries[i];
    out << "  n" << i << " [label=\"(";
    for (std::size_t a = 0; a < e.vec.alphas.size(); ++a)
      out << (a ? "," : "") << e.vec.alphas[a].str();
    out << ")\"];\n";
    if (e.parent >= 0)
      out << "  n" << e.parent << " -> n" << i << " [label=\""
          << subset_label(e.subset) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json scalar_func_to_json(const ScalarFuncSpec& phi) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ScalarFuncSpec::Identity>)
          return json{{"kind", "identity"}};
        else if constexpr (std::is_same_v<T, ScalarFuncSpec::Log>)
          return json{{"kind", "log"}};
        else if constexpr (std::is_same_v<T, ScalarFuncSpec::Exp>)
          return json{{"kind", "exp"}};
        else if constexpr (std::is_same_v<T, ScalarFuncSpec::Power>)
          return json{{"kind", "power"}, {"r", n.r}};
        else if constexpr (std::is_same_v<T, ScalarFuncSpec::Affine>)
          return json{{"kind", "affine"}, {"a", n.a}, {"b", n.b}};
        else {
          json parts = json::array();
          for (const auto& part : n.parts)
            parts.push_back(scalar_func_to_json(part));
          return json{{"kind", "compose"}, {"parts", parts}};
        }
      },
      phi.node);
}

ScalarFuncSpec scalar_func_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity")
    return {ScalarFuncSpec::Identity{}};
  if (kind == "log")
    return {ScalarFuncSpec::Log{}};
  if (kind == "exp")
    return {ScalarFuncSpec::Exp{}};
  if (kind == "power")
    return {ScalarFuncSpec::Power{j.at("r").get<double>()}};
  if (kind == "affine")
    return {ScalarFuncSpec::Affine{j.at("a").get<double>(),
                                   j.at("b").get<double>()}};
  if (kind == "compose") {
    ScalarFuncSpec::Compose c;
    for (const auto& part : j.at("parts"))
      c.parts.push_back(scalar_func_from_json(part));
    return {std::move(c)};
  }
  throw Error("unknown scalar function kind: " + kind);
}

json solution_report_to_json(const SolutionReport& report) {
  json eq3 = json::object();
  for (const auto& [mask, res] : report.eq3_residuals)
    eq3[std::to_string(mask)] = res;
  return json{{"eq2_residual", report.eq2_residual},
              {"eq2_witness", report.eq2_witness},
              {"eq3_residuals", eq3},
              {"representation_residual", report.representation_residual}};
}

std::string residuals_to_csv(const SolutionReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "equation,subset_mask,residual\n";
  out << "eq2,," << report.eq2_residual << "\n";
  for (const auto& [mask, res] : report.eq3_residuals)
    out << "eq3," << mask << "," << res << "\n";
  out << "representation,," << report.representation_residual << "\n";
  return out.str();
}

} // namespace meankit
