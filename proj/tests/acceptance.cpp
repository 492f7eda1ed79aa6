// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must point at the meankit CLI binary (used by the
// determinism criterion).

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "meankit/checks.hpp"
#include "meankit/closure.hpp"
#include "meankit/complement.hpp"
#include "meankit/eval.hpp"
#include "meankit/funceq.hpp"
#include "meankit/hfamily.hpp"
#include "meankit/iterate.hpp"
#include "meankit/json_io.hpp"

#include "helpers.hpp"

using namespace meankit;

namespace {

std::string g_cli_path;
int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << name << " [" << ms << " ms]";
  if (!detail.empty())
    std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok)
    ++g_failures;
}

std::vector<std::vector<double>> samples(int count, int p,
                                         std::uint64_t seed = 42) {
  return sample_vectors(SampleConfig{count, seed, Domain::interval(0.0, 10.0)},
                        p);
}

bool pythagorean_invariance(std::string& detail) {
  double worst = 0.0;
  for (const auto& x : samples(1000, 2)) {
    const double g = std::sqrt(x[0] * x[1]);
    const double a = eval_mean(MeanExpr::arithmetic(2), x);
    const double h = eval_mean(MeanExpr::harmonic(2), x);
    worst = std::max(worst, std::abs(std::sqrt(a * h) - g) / g);
  }
  detail = "max residual " + std::to_string(worst);
  return worst < 1e-12;
}

bool three_variable_extension(std::string& detail) {
  double worst_inv = 0.0, worst_prod = 0.0;
  const MeanExpr a3 = MeanExpr::arithmetic(3);
  const MeanExpr f3 = MeanExpr::gini_f();
  const MeanExpr h3 = MeanExpr::harmonic(3);
  const MeanExpr g3 = MeanExpr::geometric(3);
  for (const auto& x : samples(1000, 3)) {
    const double a = eval_mean(a3, x), f = eval_mean(f3, x),
                 h = eval_mean(h3, x), g = eval_mean(g3, x);
    const std::vector<double> y{a, f, h};
    worst_inv = std::max(worst_inv, std::abs(eval_mean(g3, y) - g) / g);
    const double prod = x[0] * x[1] * x[2];
    worst_prod = std::max(worst_prod, std::abs(a * f * h - prod) / prod);
  }
  detail = "invariance " + std::to_string(worst_inv) + ", product identity " +
           std::to_string(worst_prod);
  return worst_inv < 1e-12 && worst_prod < 1e-12;
}

bool agm_convergence(std::string& detail) {
  const double oracle = test::agm_oracle(1, 2);
  const MeanVector ag({MeanExpr::arithmetic(2), MeanExpr::geometric(2)});
  const auto report = iterate_mapping(ag, std::vector<double>{1, 2});
  detail = "limit " + std::to_string(report.limit) + " in " +
           std::to_string(report.iterations) + " iterations";
  return report.converged && report.iterations <= 60 &&
         report.diameter <= 1e-13 * std::max(1.0, std::abs(report.limit)) &&
         std::abs(report.limit - oracle) <= 1e-9 &&
         std::abs(report.limit - 1.4567910310) <= 1e-9;
}

// shared by criteria 4 and 5
struct CrossOracleResult {
  double worst_rel = 0.0;
  bool in_bracket = true;
};

CrossOracleResult run_cross_oracle() {
  CrossOracleResult result;
  for (int p : {2, 3, 4}) {
    std::vector<Rational> alphas(static_cast<std::size_t>(p),
                                 Rational(-1, p - 1));
    alphas[0] = Rational(1);
    const ExponentVector root(p, alphas);
    const auto mapping = test::mapping_ABeta(p);
    const MeanExpr g = MeanExpr::geometric(p);
    const auto xs = samples(100, p);
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < p; ++i)
        if (mask & (1u << i))
          subset.push_back(i + 1);
      const auto complemented = symbolic_complement(root, subset);
      const Rational beta =
          complemented.alphas[static_cast<std::size_t>(subset.front() - 1)];
      const ComplementSpec spec(g, mapping, subset);
      for (const auto& x : xs) {
        const double v = complement_value(spec, x);
        result.worst_rel =
            std::max(result.worst_rel, rel_err(v, hfam_eval(p, beta, x)));
        const auto mx = mapping.apply(x);
        double lo = mx[static_cast<std::size_t>(subset.front() - 1)], hi = lo;
        for (int i : subset) {
          lo = std::min(lo, mx[static_cast<std::size_t>(i - 1)]);
          hi = std::max(hi, mx[static_cast<std::size_t>(i - 1)]);
        }
        if (v < lo || v > hi)
          result.in_bracket = false;
      }
    }
  }
  return result;
}

bool example1_unsolvable(std::string& detail) {
  const MeanExpr a3 = MeanExpr::arithmetic(3);
  const std::map<int, MeanExpr> fixed{
      {1, MeanExpr::subset_arithmetic(3, {1, 2})},
      {2, MeanExpr::projection(3, 2)}};
  bool witness_fails = false;
  try {
    solve_completion(a3, fixed, {3}, std::vector<double>{0.1, 2, 0.1});
  } catch (const NoSolutionInRange&) {
    witness_fails = true;
  }
  int unsolvable = 0;
  const auto xs = samples(1000, 3);
  for (const auto& x : xs) {
    try {
      solve_completion(a3, fixed, {3}, x);
    } catch (const NoSolutionInRange&) {
      ++unsolvable;
    }
  }
  detail = "witness " + std::string(witness_fails ? "unsolvable" : "SOLVED?") +
           ", " + std::to_string(unsolvable) + "/1000 random unsolvable";
  return witness_fails && unsolvable >= 100;
}

bool closure_correctness(std::string& detail) {
  const auto closure = closure_enumerate(3, 4);
  bool props = true;
  const Rational lo(-1, 2), hi(1);
  for (const auto& entry : closure.entries) {
    if (entry.vec.sum() != Rational(0))
      props = false;
    for (const auto& a : entry.vec.alphas)
      if (a < lo || a > hi)
        props = false;
  }
  const bool denoms = verify_remark3(closure).ok;

  const auto p2 = closure_enumerate(2, 4);
  const bool p2_exact =
      p2.entries.size() == 2 &&
      p2.entries[0].vec.alphas ==
          std::vector<Rational>{Rational(1), Rational(-1)} &&
      p2.entries[1].vec.alphas ==
          std::vector<Rational>{Rational(0), Rational(0)};

  detail = std::to_string(closure.entries.size()) + " vectors at p=3 depth 4";
  return props && denoms && p2_exact;
}

const ClosureTree& depth2_closure() {
  static const ClosureTree tree = closure_generate(
      MeanExpr::geometric(3), test::mapping_ABeta(3), 2,
      SampleConfig{100, 42, Domain::interval(0.0, 10.0)});
  return tree;
}

bool envelope_bounds(std::string& detail) {
  const auto& tree = depth2_closure();
  const auto mapping = test::mapping_ABeta(3);
  double worst = 0.0;
  for (const auto& x : samples(1000, 3)) {
    const auto mx = mapping.apply(x);
    const double lo = *std::min_element(mx.begin(), mx.end());
    const double hi = *std::max_element(mx.begin(), mx.end());
    for (const auto& mean : tree.coordinate_means) {
      const double v = eval_mean(mean, x);
      worst = std::max(worst, std::max(lo - v, v - hi) /
                                  std::max(1.0, std::abs(hi)));
    }
  }
  detail = std::to_string(tree.coordinate_means.size()) +
           " coordinate means, worst excess " + std::to_string(worst);
  return worst <= 1e-10;
}

bool coordinate_symmetry(std::string& detail) {
  const auto& tree = depth2_closure();
  const SampleConfig cfg{200, 42, Domain::interval(0.0, 10.0)};
  for (const auto& mean : tree.coordinate_means) {
    const auto rep = check_symmetric(mean, cfg, 1e-10);
    if (!rep.symmetric) {
      detail = "asymmetric coordinate, deviation " +
               std::to_string(rep.max_deviation);
      return false;
    }
  }
  detail = "all " + std::to_string(tree.coordinate_means.size()) +
           " coordinate means symmetric over all permutations";
  return true;
}

bool hfamily_window_suite(std::string& detail) {
  const SampleConfig cfg{400, 42, Domain::interval(0.0, 10.0)};
  for (int p : {2, 3, 5}) {
    const MeanExpr a = MeanExpr::arithmetic(p);
    const MeanExpr g = MeanExpr::geometric(p);
    const auto xs = samples(200, p);
    for (const auto& x : xs) {
      if (rel_err(hfam_eval(p, Rational(1), x), eval_mean(a, x)) >= 1e-12)
        return false;
      if (rel_err(hfam_eval(p, Rational(0), x), eval_mean(g, x)) >= 1e-12)
        return false;
      // strict monotonicity in alpha at nonconstant samples
      const bool constant =
          *std::max_element(x.begin(), x.end()) ==
          *std::min_element(x.begin(), x.end());
      if (!constant &&
          !(hfam_eval(p, Rational(-1, p - 1), x) < hfam_eval(p, Rational(0), x) &&
            hfam_eval(p, Rational(0), x) < hfam_eval(p, Rational(1, 2), x) &&
            hfam_eval(p, Rational(1, 2), x) < hfam_eval(p, Rational(1), x)))
        return false;
    }
    for (const Rational alpha : {Rational(-1, p - 1), Rational(0),
                                 Rational(1, 2), Rational(1)})
      if (!check_strict_mean(MeanExpr::hfamily(p, alpha), cfg).witness.empty())
        return false;
    for (const Rational alpha :
         {Rational(-1, p - 1) - Rational(1, 2), Rational(3, 2)})
      if (check_strict_mean(MeanExpr::hfamily(p, alpha), cfg).witness.empty())
        return false;
  }
  detail = "endpoints, monotonicity and strictness window for p in {2,3,5}";
  return true;
}

bool funceq_solutions(std::string& detail) {
  const MeanVector m = test::mapping_ABeta(3);
  const KernelMean g = KernelMean::closed(MeanExpr::geometric(3));
  const SampleConfig cfg{200, 42, Domain::interval(0.0, 10.0)};
  double worst = 0.0;
  for (const ScalarFuncSpec phi :
       {ScalarFuncSpec{ScalarFuncSpec::Identity{}},
        ScalarFuncSpec{ScalarFuncSpec::Log{}},
        ScalarFuncSpec{ScalarFuncSpec::Power{2.0}}}) {
    const auto f = build_F(phi, g);
    const auto report = verify_solution(
        [&f](std::span<const double> v) { return f(v); }, m, g, cfg);
    worst = std::max(worst, report.eq2_residual);
    for (const auto& [mask, res] : report.eq3_residuals)
      worst = std::max(worst, res);
  }
  // negative case: F = A under (A,G) at x = (1,4)
  const FuncHandle fa = [](std::span<const double> v) {
    return 0.5 * (v[0] + v[1]);
  };
  const MeanVector ag({MeanExpr::arithmetic(2), MeanExpr::geometric(2)});
  const std::vector<double> x{1, 4};
  const auto agx = ag.apply(x);
  const double neg_residual = std::abs(fa(agx) - fa(x));
  detail = "positive residuals <= " + std::to_string(worst) +
           ", negative residual " + std::to_string(neg_residual);
  return worst < 1e-10 && neg_residual >= 0.1;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>&1";
  std::string out;
  if (FILE* pipe = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      out.append(buf.data(), n);
    pclose(pipe);
  }
  return out;
}

bool cli_determinism(std::string& detail) {
  const std::vector<std::string> commands{
      "eval --K harmonic --x 1,2,3 --seed 42",
      "iterate --M arith,geom --x 1,2 --seed 42",
      "iterate --M arith,harm --x 1,4 --trace --format csv --seed 42",
      "invariance-check --K geometric --M arith,harm --seed 42",
      "complement --K geometric --M arith,harm --S 2 --x 1,4 --seed 42",
      "complement --K geometric --M arith,beta,beta --S 1,2 --x 1,2,3 "
      "--seed 42",
      "complete --K arithmetic --fixed "
      "'{\"1\":{\"kind\":\"subset_arithmetic\",\"S\":[1,2]},\"2\":{\"kind\":"
      "\"projection\",\"i\":2}}' --S 3 --x 0.1,2,0.1 --seed 42",
      "closure --K geometric --M arith,beta,beta --depth 2 --seed 42",
      "closure --K geometric --M arith,harm --depth 2 --format dot --seed 42",
      "hfam-closure --p 3 --depth 1 --seed 42",
      "hfam-closure --p 3 --depth 4 --format dot --seed 42",
      "funceq-verify --phi '{\"kind\":\"log\"}' --K geometric --M "
      "arith,beta,beta --seed 42",
  };
  for (const auto& cmd : commands) {
    const std::string a = run_cli(cmd);
    const std::string b = run_cli(cmd);
    if (a.empty() || a != b) {
      detail = "non-deterministic or empty output for: " + cmd;
      return false;
    }
  }
  detail = std::to_string(commands.size()) + " commands byte-identical";
  return true;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-meankit-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  criterion(1, "Pythagorean invariance G(A,H) = G", pythagorean_invariance);
  criterion(2, "three-variable extension G(A,F,H) = G and A*F*H = x1*x2*x3",
            three_variable_extension);
  criterion(3, "(A,G) converges to the 50-digit AGM oracle", agm_convergence);

  CrossOracleResult cross;
  criterion(4, "bisection complement matches the H-family exponent oracle",
            [&cross](std::string& detail) {
              cross = run_cross_oracle();
              detail = "worst relative error " +
                       std::to_string(cross.worst_rel);
              return cross.worst_rel < 1e-10;
            });
  criterion(5, "complement values confined to [min M_S, max M_S]",
            [&cross](std::string&) { return cross.in_bracket; });

  criterion(6, "no mean completes (A{1,2}, pi_2, .) under A",
            example1_unsolvable);
  criterion(7, "exact closure: zero sums, range, denominators, p=2 family",
            closure_correctness);
  criterion(8, "numeric closure coordinate means obey the envelope bounds",
            envelope_bounds);
  criterion(9, "numeric closure coordinate means are symmetric",
            coordinate_symmetry);
  criterion(10, "H-family endpoints, monotonicity and strictness window",
            hfamily_window_suite);
  criterion(11, "F = phi o K solves eq2 and every eq3; F = A does not",
            funceq_solutions);
  criterion(12, "CLI output is byte-identical across repeated runs",
            cli_determinism);

  if (g_failures) {
    std::cout << g_failures << " criteria FAILED\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
