// meankit command-line front end: mean evaluation, invariant-mean iteration,
// complementary averaging, closure enumeration, and functional-equation
// verification, with JSON/CSV/DOT output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "meankit/checks.hpp"
#include "meankit/closure.hpp"
#include "meankit/complement.hpp"
#include "meankit/eval.hpp"
#include "meankit/funceq.hpp"
#include "meankit/hfamily.hpp"
#include "meankit/iterate.hpp"
#include "meankit/json_io.hpp"

namespace {

using meankit::json;

std::vector<double> parse_vector(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stod(tok));
  if (out.empty())
    throw CLI::ValidationError("--x", "expected a comma-separated vector");
  return out;
}

std::vector<int> parse_subset(const std::string& s, int p) {
  std::vector<int> out;
  if (s.rfind("mask:", 0) == 0) {
    const unsigned mask = static_cast<unsigned>(std::stoul(s.substr(5)));
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i))
        out.push_back(i + 1);
    return out;
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stoi(tok));
  return out;
}

json keyword_to_spec(const std::string& word) {
  if (word == "arith" || word == "arithmetic" || word == "A")
    return json{{"kind", "arithmetic"}};
  if (word == "geom" || word == "geometric" || word == "G")
    return json{{"kind", "geometric"}};
  if (word == "harm" || word == "harmonic" || word == "H")
    return json{{"kind", "harmonic"}};
  if (word == "min")
    return json{{"kind", "min"}};
  if (word == "max")
    return json{{"kind", "max"}};
  if (word == "beta" || word == "B")
    return json{{"kind", "beta"}};
  if (word == "gini_f" || word == "F")
    return json{{"kind", "gini_f"}};
  throw CLI::ValidationError("mean", "unknown mean keyword: " + word);
}

json normalize_mean_spec(const json& j) {
  if (j.is_string())
    return keyword_to_spec(j.get<std::string>());
  return j;
}

meankit::MeanExpr parse_mean(const std::string& s, int p) {
  json j = (!s.empty() && (s[0] == '{' || s[0] == '"')) ? json::parse(s)
                                                        : keyword_to_spec(s);
  return meankit::mean_from_json(normalize_mean_spec(j), p);
}

meankit::MeanVector parse_mapping(const std::string& s) {
  json arr;
  if (!s.empty() && s[0] == '[')
    arr = json::parse(s);
  else {
    arr = json::array();
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      arr.push_back(tok);
  }
  for (auto& item : arr)
    item = normalize_mean_spec(item);
  return meankit::mapping_from_json(arr);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n')
      std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant means, complementary averages, and mean-type "
               "mapping closures"};
  app.require_subcommand(1);

  std::string k_str, m_str, x_str, s_str, phi_str, fixed_str;
  std::string format = "json", out_path;
  double tol = meankit::default_tolerance();
  std::uint64_t seed = 42;
  int samples = 200, depth = 2, budget = 10000, max_iter = 10000, p_arg = 3;
  bool keep_trace = false, iterated_k = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or dot");
    cmd->add_option("--out", out_path, "write output to a file");
    cmd->add_option("--tol", tol, "solver tolerance");
    cmd->add_option("--seed", seed, "sampling seed");
  };

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a mean at a point");
  cmd_eval->add_option("--K", k_str, "mean spec (JSON or keyword)")->required();
  cmd_eval->add_option("--x", x_str, "comma-separated input vector")->required();
  add_common(cmd_eval);

  auto* cmd_iter = app.add_subcommand("iterate", "iterate a mean-type mapping "
                                                 "to its invariant mean");
  cmd_iter->add_option("--M", m_str, "mapping (JSON array or keyword list)")
      ->required();
  cmd_iter->add_option("--x", x_str)->required();
  cmd_iter->add_option("--max-iter", max_iter);
  cmd_iter->add_flag("--trace", keep_trace, "retain the iterate trace");
  add_common(cmd_iter);

  auto* cmd_inv = app.add_subcommand("invariance-check",
                                     "sampled residual of K o M = K");
  cmd_inv->add_option("--K", k_str)->required();
  cmd_inv->add_option("--M", m_str)->required();
  cmd_inv->add_option("--samples", samples);
  add_common(cmd_inv);

  auto* cmd_comp = app.add_subcommand("complement",
                                      "K-complementary average K_S(M) at x");
  cmd_comp->add_option("--K", k_str)->required();
  cmd_comp->add_option("--M", m_str)->required();
  cmd_comp->add_option("--S", s_str, "1-based indices (or mask:<bits>)")
      ->required();
  cmd_comp->add_option("--x", x_str)->required();
  add_common(cmd_comp);

  auto* cmd_complete = app.add_subcommand(
      "complete", "solve K o T = K for the missing coordinates");
  cmd_complete->add_option("--K", k_str)->required();
  cmd_complete->add_option("--fixed", fixed_str,
                           "JSON object index -> mean spec")->required();
  cmd_complete->add_option("--S", s_str)->required();
  cmd_complete->add_option("--x", x_str)->required();
  add_common(cmd_complete);

  auto* cmd_closure = app.add_subcommand(
      "closure", "numeric closure of M under K-complementary averaging");
  cmd_closure->add_option("--K", k_str)->required();
  cmd_closure->add_option("--M", m_str)->required();
  cmd_closure->add_option("--depth", depth);
  cmd_closure->add_option("--budget", budget);
  add_common(cmd_closure);

  auto* cmd_hfam = app.add_subcommand(
      "hfam-closure", "exact closure of (A,B_p,...,B_p) under G");
  cmd_hfam->add_option("--p", p_arg)->required();
  cmd_hfam->add_option("--depth", depth);
  cmd_hfam->add_option("--budget", budget);
  add_common(cmd_hfam);

  auto* cmd_feq = app.add_subcommand(
      "funceq-verify", "residuals of F o M = F with F = phi o K");
  cmd_feq->add_option("--phi", phi_str, "scalar function spec (JSON)")
      ->required();
  cmd_feq->add_option("--K", k_str)->required();
  cmd_feq->add_option("--M", m_str)->required();
  cmd_feq->add_option("--samples", samples);
  cmd_feq->add_flag("--iterated-K", iterated_k,
                    "realize K as the limit of iterates of M");
  add_common(cmd_feq);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_eval) {
      const auto x = parse_vector(x_str);
      const auto k = parse_mean(k_str, static_cast<int>(x.size()));
      emit_json(json{{"value", meankit::eval_mean(k, x)}}, out_path);
    } else if (*cmd_iter) {
      const auto x = parse_vector(x_str);
      const auto m = parse_mapping(m_str);
      meankit::IterationConfig cfg{tol, max_iter,
                                   keep_trace || format == "csv"};
      const auto report = meankit::iterate_mapping(m, x, cfg);
      if (!report.converged) {
        emit_json(json{{"error",
                        {{"type", "NotConverged"},
                         {"message", "iteration hit the max-iteration cap"},
                         {"report", meankit::report_to_json(report)}}}},
                  out_path);
        return 2;
      }
      if (format == "csv")
        emit(meankit::trace_to_csv(report), out_path);
      else
        emit_json(meankit::report_to_json(report), out_path);
    } else if (*cmd_inv) {
      const auto m = parse_mapping(m_str);
      const auto k = parse_mean(k_str, m.arity());
      meankit::SampleConfig cfg;
      cfg.count = samples;
      cfg.seed = seed;
      const auto rep = meankit::check_invariance(k, m, cfg);
      emit_json(json{{"max_residual", rep.max_residual},
                     {"witness", rep.witness}},
                out_path);
    } else if (*cmd_comp) {
      const auto x = parse_vector(x_str);
      const auto m = parse_mapping(m_str);
      const auto k = parse_mean(k_str, m.arity());
      const auto s = parse_subset(s_str, m.arity());
      meankit::IterationConfig cfg;
      cfg.tol = tol;
      const meankit::ComplementSpec spec(k, m, s);
      const double v = meankit::complement_value(spec, x, cfg);
      emit_json(json{{"value", v}, {"S", spec.subset}}, out_path);
    } else if (*cmd_complete) {
      const auto x = parse_vector(x_str);
      const int p = static_cast<int>(x.size());
      const auto k = parse_mean(k_str, p);
      const auto s = parse_subset(s_str, p);
      std::map<int, meankit::MeanExpr> fixed;
      const json jfixed = json::parse(fixed_str);
      for (const auto& [key, value] : jfixed.items())
        fixed.emplace(std::stoi(key),
                      meankit::mean_from_json(normalize_mean_spec(value), p));
      meankit::IterationConfig cfg;
      cfg.tol = tol;
      const double v = meankit::solve_completion(k, fixed, s, x, cfg);
      emit_json(json{{"value", v}, {"S", s}}, out_path);
    } else if (*cmd_closure) {
      const auto m = parse_mapping(m_str);
      const auto k = parse_mean(k_str, m.arity());
      meankit::SampleConfig cfg;
      cfg.seed = seed;
      const auto tree = meankit::closure_generate(k, m, depth, cfg, budget);
      if (format == "dot")
        emit(meankit::closure_to_dot(tree), out_path);
      else
        emit_json(meankit::closure_to_json(tree), out_path);
    } else if (*cmd_hfam) {
      const auto closure = meankit::closure_enumerate(p_arg, depth, budget);
      if (format == "dot")
        emit(meankit::symbolic_closure_to_dot(closure), out_path);
      else
        emit_json(meankit::symbolic_closure_to_json(closure), out_path);
    } else if (*cmd_feq) {
      const auto m = parse_mapping(m_str);
      const auto phi = meankit::scalar_func_from_json(json::parse(phi_str));
      const auto kernel =
          iterated_k ? meankit::KernelMean::iterated(m)
                     : meankit::KernelMean::closed(parse_mean(k_str, m.arity()));
      const auto f = meankit::build_F(phi, kernel);
      meankit::SampleConfig cfg;
      cfg.count = samples;
      cfg.seed = seed;
      const auto rep = meankit::verify_solution(
          [&f](std::span<const double> x) { return f(x); }, m, kernel, cfg);
      if (format == "csv")
        emit(meankit::residuals_to_csv(rep), out_path);
      else
        emit_json(meankit::solution_report_to_json(rep), out_path);
    }
  } catch (const meankit::NotInvariant& e) {
    emit_json(json{{"error", {{"type", "NotInvariant"}, {"message", e.what()}}}},
              out_path);
    return 2;
  } catch (const meankit::NoSolutionInRange& e) {
    emit_json(
        json{{"error", {{"type", "NoSolutionInRange"}, {"message", e.what()}}}},
        out_path);
    return 2;
  } catch (const meankit::NotConverged& e) {
    emit_json(json{{"error", {{"type", "NotConverged"}, {"message", e.what()}}}},
              out_path);
    return 2;
  } catch (const meankit::DomainViolation& e) {
    emit_json(
        json{{"error", {{"type", "DomainViolation"}, {"message", e.what()}}}},
        out_path);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
