#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "meankit/checks.hpp"
#include "meankit/closure.hpp"
#include "meankit/complement.hpp"
#include "meankit/hfamily.hpp"

#include "helpers.hpp"

using namespace meankit;

namespace {

const SampleConfig kCfg{100, 42, Domain::interval(0.0, 10.0)};

} // namespace

TEST_CASE("singleton complement recovers the unique second Pythagorean mean") {
  const ComplementSpec spec(MeanExpr::geometric(2), test::mapping_AH(), {2});
  const double v = complement_value(spec, std::vector<double>{1, 4});
  CHECK(rel_err(v, 1.6) < 1e-12); // H(1,4)
}

TEST_CASE("complement of {1,2} in (A,B3,B3) under G is H_{3,1/4}") {
  const ComplementSpec spec(MeanExpr::geometric(3), test::mapping_ABeta(3),
                            {1, 2});
  const double v = complement_value(spec, std::vector<double>{1, 2, 3});
  CHECK(rel_err(v, std::pow(12.0, 0.25)) < 1e-12);
}

TEST_CASE("S = {1..p} gives back K itself") {
  const ComplementSpec spec(MeanExpr::geometric(2), test::mapping_AH(), {1, 2});
  const double v = complement_value(spec, std::vector<double>{1, 4});
  CHECK(rel_err(v, 2.0) < 1e-12);
}

TEST_CASE("complement values stay inside the bracket") {
  const ComplementSpec spec(MeanExpr::geometric(3), test::mapping_ABeta(3),
                            {1, 2});
  for (const auto& x : sample_vectors(kCfg, 3)) {
    const auto mx = spec.m.apply(x);
    const double lo = std::min(mx[0], mx[1]);
    const double hi = std::max(mx[0], mx[1]);
    const double v = complement_value(spec, x);
    CHECK(v >= lo);
    CHECK(v <= hi);
  }
}

TEST_CASE("non-invariant pair raises NotInvariant") {
  // A is not invariant under (A,G); the bracket misses the target
  const ComplementSpec spec(MeanExpr::arithmetic(2), test::mapping_AG(), {2});
  CHECK_THROWS_AS(complement_value(spec, std::vector<double>{1, 4}),
                  NotInvariant);
}

TEST_CASE("complement mean node evaluates like complement_value") {
  const ComplementSpec spec(MeanExpr::geometric(3), test::mapping_ABeta(3),
                            {1, 2});
  const MeanExpr node = complement_mean(spec);
  for (const auto& x : sample_vectors(kCfg, 3))
    CHECK(rel_err(eval_mean(node, x),
                  eval_mean(MeanExpr::hfamily(3, Rational(1, 4)), x)) < 1e-10);
  // reflexive at constants
  CHECK(eval_mean(node, std::vector<double>{4, 4, 4}) ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("build_KS_mapping restores K-invariance") {
  const ComplementSpec spec(MeanExpr::geometric(3), test::mapping_ABeta(3),
                            {1, 2});
  const auto ks = build_KS_mapping(spec);
  SampleConfig cfg = kCfg;
  cfg.count = 50;
  CHECK(check_invariance(MeanExpr::geometric(3), ks, cfg).max_residual <
        1e-10);
  // coordinate structure: S entries share the complement, the rest are M_i
  for (const auto& x : sample_vectors(cfg, 3)) {
    const auto y = ks.apply(x);
    CHECK(y[0] == y[1]);
    CHECK(y[2] == eval_mean(MeanExpr::beta(3), x));
  }
}

TEST_CASE("full-S mapping collapses to (K,...,K)") {
  const ComplementSpec spec(MeanExpr::geometric(2), test::mapping_AH(), {1, 2});
  const auto ks = build_KS_mapping(spec);
  for (const auto& x : sample_vectors(kCfg, 2)) {
    const double g = eval_mean(MeanExpr::geometric(2), x);
    const auto y = ks.apply(x);
    CHECK(rel_err(y[0], g) < 1e-10);
    CHECK(rel_err(y[1], g) < 1e-10);
  }
}

TEST_CASE("dual complement examples") {
  const MeanExpr g3 = MeanExpr::geometric(3);

  SUBCASE("S={2,3}: K_S is B3 unchanged, dual is the arithmetic mean") {
    const ComplementSpec spec(g3, test::mapping_ABeta(3), {2, 3});
    const MeanExpr dual = dual_complement(spec);
    for (const auto& x : sample_vectors(kCfg, 3))
      CHECK(rel_err(eval_mean(dual, x),
                    eval_mean(MeanExpr::arithmetic(3), x)) < 1e-9);
  }
  SUBCASE("S={1}: dual of identical remaining coordinates is B3") {
    const ComplementSpec spec(g3, test::mapping_ABeta(3), {1});
    const MeanExpr dual = dual_complement(spec);
    for (const auto& x : sample_vectors(kCfg, 3))
      CHECK(rel_err(eval_mean(dual, x), eval_mean(MeanExpr::beta(3), x)) <
            1e-9);
  }
  SUBCASE("p=2, S={1}: dual of (A,H) under G is H") {
    const ComplementSpec spec(MeanExpr::geometric(2), test::mapping_AH(), {1});
    const MeanExpr dual = dual_complement(spec);
    for (const auto& x : sample_vectors(kCfg, 2))
      CHECK(rel_err(eval_mean(dual, x), eval_mean(MeanExpr::harmonic(2), x)) <
            1e-9);
  }
  SUBCASE("S = full set is rejected") {
    const ComplementSpec spec(g3, test::mapping_ABeta(3), {1, 2, 3});
    CHECK_THROWS_AS(dual_complement(spec), SIsFull);
  }
}

TEST_CASE("dual values lie between the remaining coordinate means") {
  const ComplementSpec spec(MeanExpr::geometric(3), test::mapping_ABeta(3),
                            {2, 3});
  const MeanExpr dual = dual_complement(spec);
  for (const auto& x : sample_vectors(kCfg, 3)) {
    const double m1 = eval_mean(spec.m[0], x); // the only off-S coordinate
    CHECK(rel_err(eval_mean(dual, x), m1) < 1e-9);
  }
}

TEST_CASE("solve_completion") {
  const MeanExpr a3 = MeanExpr::arithmetic(3);
  const std::map<int, MeanExpr> fixed{
      {1, MeanExpr::subset_arithmetic(3, {1, 2})},
      {2, MeanExpr::projection(3, 2)}};

  SUBCASE("the no-third-mean witness") {
    CHECK_THROWS_AS(solve_completion(a3, fixed, {3},
                                     std::vector<double>{0.1, 2, 0.1}),
                    NoSolutionInRange);
  }
  SUBCASE("trivially completable mapping") {
    const std::map<int, MeanExpr> both_a{{1, a3}, {2, a3}};
    const double v =
        solve_completion(a3, both_a, {3}, std::vector<double>{1, 2, 3});
    CHECK(rel_err(v, 2.0) < 1e-12);
  }
  SUBCASE("geometric completion at p=2") {
    const std::map<int, MeanExpr> f2{{1, MeanExpr::arithmetic(2)}};
    const double v = solve_completion(MeanExpr::geometric(2), f2, {2},
                                      std::vector<double>{1, 4});
    CHECK(rel_err(v, 1.6) < 1e-12); // G^2/A = 4/2.5
  }
  SUBCASE("missing coordinate is an error") {
    const std::map<int, MeanExpr> partial{{1, a3}};
    CHECK_THROWS_AS(
        solve_completion(a3, partial, {3}, std::vector<double>{1, 2, 3}),
        ArityMismatch);
  }
}

TEST_CASE("numeric closure of (A,H) under G") {
  const auto tree = closure_generate(MeanExpr::geometric(2),
                                     test::mapping_AH(), 2, kCfg);
  CHECK(tree.nodes.size() == 2); // (A,H) and (G,G)
}

TEST_CASE("numeric closure of (A,B3,B3) under G at depth 1") {
  const auto tree = closure_generate(MeanExpr::geometric(3),
                                     test::mapping_ABeta(3), 1, kCfg);
  // symbolic oracle: subsets {1},{2},{3},{2,3} reproduce the root;
  // {1,2} and {1,3} give the H_{1/4} variants; the full set gives (G,G,G)
  CHECK(tree.nodes.size() == 4);
  // distinct coordinate means: A, B3, H_{1/4}, G
  CHECK(tree.coordinate_means.size() == 4);
}

TEST_CASE("closure coordinate means obey the envelope bounds") {
  const auto tree = closure_generate(MeanExpr::geometric(3),
                                     test::mapping_ABeta(3), 2, kCfg);
  SampleConfig cfg = kCfg;
  cfg.count = 100;
  for (const auto& x : sample_vectors(cfg, 3)) {
    const auto mx = test::mapping_ABeta(3).apply(x);
    const double lo = *std::min_element(mx.begin(), mx.end());
    const double hi = *std::max_element(mx.begin(), mx.end());
    for (const auto& mean : tree.coordinate_means) {
      const double v = eval_mean(mean, x);
      CHECK(v >= lo - 1e-10 * std::max(1.0, hi));
      CHECK(v <= hi + 1e-10 * std::max(1.0, hi));
    }
  }
}

TEST_CASE("closure coordinate means stay symmetric") {
  const auto tree = closure_generate(MeanExpr::geometric(3),
                                     test::mapping_ABeta(3), 2, kCfg);
  SampleConfig cfg = kCfg;
  cfg.count = 30;
  for (const auto& mean : tree.coordinate_means)
    CHECK(check_symmetric(mean, cfg).symmetric);
}

TEST_CASE("dual mapping membership when off-S coordinates are identical") {
  // with M = (A,B3,B3) and S={2,3} the dual mapping appears in the depth-2
  // closure
  const MeanExpr g3 = MeanExpr::geometric(3);
  const ComplementSpec spec(g3, test::mapping_ABeta(3), {2, 3});
  const MeanVector ks = build_KS_mapping(spec);
  const MeanExpr dual = dual_complement(spec);
  std::vector<MeanExpr> coords{dual, ks[1], ks[2]};
  const MeanVector dual_mapping(std::move(coords));

  const auto tree = closure_generate(g3, test::mapping_ABeta(3), 2, kCfg);
  // fingerprint the dual mapping on the tree's sample points and look it up
  bool found = false;
  for (const auto& node : tree.nodes) {
    bool all = true;
    for (int i = 0; i < 3 && all; ++i)
      for (std::size_t j = 0; j < tree.sample_points.size() && all; ++j)
        if (rel_err(eval_mean(dual_mapping[i], tree.sample_points[j]),
                    node.fingerprint[static_cast<std::size_t>(i)][j]) > 1e-8)
          all = false;
    if (all) {
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("closure rejects a non-invariant K") {
  CHECK_THROWS_AS(closure_generate(MeanExpr::arithmetic(2), test::mapping_AG(),
                                   2, kCfg),
                  NotInvariant);
}

TEST_CASE("closure node budget") {
  CHECK_THROWS_AS(closure_generate(MeanExpr::geometric(3),
                                   test::mapping_ABeta(3), 2, kCfg, 2),
                  BudgetExceeded);
}

TEST_CASE("closure determinism") {
  const auto a = closure_generate(MeanExpr::geometric(3),
                                  test::mapping_ABeta(3), 2, kCfg);
  const auto b = closure_generate(MeanExpr::geometric(3),
                                  test::mapping_ABeta(3), 2, kCfg);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].parent == b.nodes[i].parent);
    CHECK(a.nodes[i].subset == b.nodes[i].subset);
    CHECK(a.nodes[i].fingerprint == b.nodes[i].fingerprint);
  }
}
