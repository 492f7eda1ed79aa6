#include <benchmark/benchmark.h>

#include <vector>

#include "meankit/closure.hpp"
#include "meankit/complement.hpp"
#include "meankit/eval.hpp"
#include "meankit/hfamily.hpp"
#include "meankit/iterate.hpp"

using namespace meankit;

namespace {

MeanVector mapping_ABeta(int p) {
  std::vector<MeanExpr> coords{MeanExpr::arithmetic(p)};
  for (int i = 1; i < p; ++i)
    coords.push_back(MeanExpr::beta(p));
  return MeanVector(std::move(coords));
}

void BM_EvalBeta(benchmark::State& state) {
  const MeanExpr b = MeanExpr::beta(3);
  const std::vector<double> x{1.0, 2.0, 3.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_mean(b, x));
}
BENCHMARK(BM_EvalBeta);

void BM_IterateAG(benchmark::State& state) {
  const MeanVector ag({MeanExpr::arithmetic(2), MeanExpr::geometric(2)});
  const std::vector<double> x{1.0, 2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(iterate_mapping(ag, x));
}
BENCHMARK(BM_IterateAG);

void BM_ComplementBisection(benchmark::State& state) {
  const ComplementSpec spec(MeanExpr::geometric(3), mapping_ABeta(3), {1, 2});
  const std::vector<double> x{1.0, 2.0, 3.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(complement_value(spec, x));
}
BENCHMARK(BM_ComplementBisection);

void BM_NumericClosureDepth2(benchmark::State& state) {
  const SampleConfig cfg{50, 42, Domain::interval(0.0, 10.0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        closure_generate(MeanExpr::geometric(3), mapping_ABeta(3), 2, cfg));
}
BENCHMARK(BM_NumericClosureDepth2);

void BM_SymbolicClosure(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(closure_enumerate(3, 4));
}
BENCHMARK(BM_SymbolicClosure);

} // namespace

BENCHMARK_MAIN();
