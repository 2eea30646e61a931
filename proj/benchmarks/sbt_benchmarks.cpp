#include <random>

#include <benchmark/benchmark.h>

#include "sbt/distance.hpp"
#include "sbt/emitter.hpp"
#include "sbt/reduction.hpp"
#include "sbt/search.hpp"

using namespace sbt;

namespace {

Permutation random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> interior(static_cast<std::size_t>(n - 1));
  std::iota(interior.begin(), interior.end(), 1);
  std::shuffle(interior.begin(), interior.end(), rng);
  std::vector<int> images{0};
  images.insert(images.end(), interior.begin(), interior.end());
  images.push_back(n);
  return Permutation(images);
}

const char *kFourVar = "p cnf 4 6\n1 2 -3 0\n1 -2 0\n-1 2 -4 0\n-1 3 4 0\n3 -4 0\n-2 -3 4 0\n";
const char *kContradiction = "p cnf 1 2\n1 0\n-1 0\n";

ReductionOutput reduced(const char *dimacs) { return reduce(normalize(parse_dimacs(dimacs))); }

} // namespace

static void BM_ExactDistance(benchmark::State &state) {
  const Permutation p = random_permutation(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_distance(p, 20));
}
BENCHMARK(BM_ExactDistance)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ThreeBpMoves(benchmark::State &state) {
  const Permutation p = emit_permutation(reduced(kFourVar).assembling).permutation;
  for (auto _ : state) benchmark::DoNotOptimize(three_bp_moves(p));
}
BENCHMARK(BM_ThreeBpMoves);

static void BM_Reduce(benchmark::State &state) {
  const CnfFormula f = normalize(parse_dimacs(kFourVar));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(f));
}
BENCHMARK(BM_Reduce)->Unit(benchmark::kMicrosecond);

static void BM_Emit(benchmark::State &state) {
  const Assembling a = reduced(kFourVar).assembling;
  for (auto _ : state) benchmark::DoNotOptimize(emit_permutation(a));
}
BENCHMARK(BM_Emit)->Unit(benchmark::kMicrosecond);

static void BM_GuidedCollapse(benchmark::State &state) {
  const ReductionOutput r = reduced(kFourVar);
  const Assignment model = parse_assignment_bits("1010", 4);
  for (auto _ : state) benchmark::DoNotOptimize(guided_collapse(r, model));
}
BENCHMARK(BM_GuidedCollapse)->Unit(benchmark::kMillisecond);

static void BM_CollapseSearchSat(benchmark::State &state) {
  const TdtInstance inst = reduced(kFourVar).assembling.instance();
  for (auto _ : state) benchmark::DoNotOptimize(collapse_search(inst));
}
BENCHMARK(BM_CollapseSearchSat)->Unit(benchmark::kMillisecond);

static void BM_CollapseSearchUnsat(benchmark::State &state) {
  const TdtInstance inst = reduced(kContradiction).assembling.instance();
  for (auto _ : state) benchmark::DoNotOptimize(collapse_search(inst));
}
BENCHMARK(BM_CollapseSearchUnsat)->Unit(benchmark::kMillisecond);

static void BM_Db3SortUnsat(benchmark::State &state) {
  const Permutation p = emit_permutation(reduced(kContradiction).assembling).permutation;
  for (auto _ : state) benchmark::DoNotOptimize(db3_sort_decision(p));
}
BENCHMARK(BM_Db3SortUnsat)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
