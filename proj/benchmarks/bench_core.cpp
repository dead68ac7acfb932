#include "pomlab/pomlab.hpp"

#include <benchmark/benchmark.h>

using namespace pomlab;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  Poset p = fixtures::fig3();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(p).bytes.size());
}
BENCHMARK(BM_CanonicalForm);

void BM_ParaorthomodularCheck(benchmark::State& state) {
  Poset p = fixtures::fig3();
  for (auto _ : state) benchmark::DoNotOptimize(check(p, PosetProperty::paraorthomodular).holds);
}
BENCHMARK(BM_ParaorthomodularCheck);

void BM_DistributiveCheck(benchmark::State& state) {
  Poset p = fixtures::fig3();
  for (auto _ : state) benchmark::DoNotOptimize(check(p, PosetProperty::distributive).holds);
}
BENCHMARK(BM_DistributiveCheck);

void BM_B6Witness(benchmark::State& state) {
  Poset p = fixtures::b6();
  for (auto _ : state) benchmark::DoNotOptimize(find_b6_witness(p).has_value());
}
BENCHMARK(BM_B6Witness);

void BM_DmComplete(benchmark::State& state) {
  Poset p = fixtures::fig3();
  for (auto _ : state) benchmark::DoNotOptimize(dm_complete(p).universe.size());
}
BENCHMARK(BM_DmComplete);

void BM_WdcRaw(benchmark::State& state) {
  Poset p = fixtures::fig5();
  for (auto _ : state)
    benchmark::DoNotOptimize(is_weakly_d_continuous(p, SweepMode::raw_subsets).yes);
}
BENCHMARK(BM_WdcRaw);

void BM_AssignedDirectoids(benchmark::State& state) {
  Poset p = fixtures::fig5();
  AssignmentPolicy policy;
  policy.enumerate_all = true;
  for (auto _ : state) {
    uint64_t count = 0;
    for_each_assigned_directoid(p, policy, 1 << 20, [&](const Directoid&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AssignedDirectoids);

// regenerates the level from scratch: measures generation, not the cache
void BM_EnumeratePosets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumOptions opts;
  // warm the cache once so iterations measure the filtered sweep
  benchmark::DoNotOptimize(all_posets(n, opts).size());
  for (auto _ : state) {
    uint64_t count = 0;
    enumerate_posets(n, {PosetProperty::paraorthomodular}, [&](const Poset&) {
      ++count;
      return true;
    }, opts);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePosets)->Arg(6)->Arg(8);

void BM_FormulaEvaluate(benchmark::State& state) {
  Directoid d = fixtures::fig5_directoid();
  ParsedFormula f = parse_formula("(forall z: ((x ^ y)' ^ z) ^ (x ^ z) = 0) -> x <= y");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d, f).holds);
}
BENCHMARK(BM_FormulaEvaluate);

}  // namespace

BENCHMARK_MAIN();
