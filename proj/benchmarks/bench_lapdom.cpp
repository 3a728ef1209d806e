#include <benchmark/benchmark.h>

#include "lapdom/domination.hpp"
#include "lapdom/float_spectrum.hpp"
#include "lapdom/generators.hpp"
#include "lapdom/spectral.hpp"
#include "lapdom/verify.hpp"

using namespace lapdom;

namespace {

void BM_CharPolyRandomGraph(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.3, 42);
  const IntMatrix l = laplacian_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(l));
}
BENCHMARK(BM_CharPolyRandomGraph)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SturmCount(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(count_interval_exact(g, Interval::zero_one()).count);
}
BENCHMARK(BM_SturmCount)->Arg(8)->Arg(16)->Arg(32);

void BM_TreeInertia(benchmark::State& state) {
  const Graph t = tk_tree(static_cast<std::size_t>(state.range(0)));
  const Rational one(1);
  for (auto _ : state) benchmark::DoNotOptimize(tree_inertia(t, one));
  state.SetComplexityN(static_cast<std::int64_t>(t.order()));
}
BENCHMARK(BM_TreeInertia)->RangeMultiplier(4)->Range(1, 64)->Complexity(benchmark::oN);

void BM_TreeDomination(benchmark::State& state) {
  const Graph t = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(domination_number_tree(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeDomination)->RangeMultiplier(8)->Range(64, 1 << 15)->Complexity(benchmark::oN);

void BM_DominationSearch(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(domination_number_search(g).set.size());
}
BENCHMARK(BM_DominationSearch)->Arg(16)->Arg(24)->Arg(32)->Arg(40);

void BM_JacobiLaplacian(benchmark::State& state) {
  const IntMatrix l = laplacian_matrix(erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(float_spectrum(l).values);
}
BENCHMARK(BM_JacobiLaplacian)->Arg(16)->Arg(65)->Arg(128);

void BM_VerifyAllTree(benchmark::State& state) {
  const Graph t = random_tree(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(t, "tree").all_pass);
}
BENCHMARK(BM_VerifyAllTree)->Arg(8)->Arg(16)->Arg(30);

void BM_VerifyAllRandomGraph(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.5, 13);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(g, "er").all_pass);
}
BENCHMARK(BM_VerifyAllRandomGraph)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
