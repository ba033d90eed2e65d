#include <benchmark/benchmark.h>

#include "modsuper/catalog.hpp"
#include "modsuper/reflect.hpp"

using namespace modsuper;

namespace {

void BM_Enumerate(benchmark::State& state, const char* slot) {
  const CartanDatum d = lookup(slot).matrix->working;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(d));
}

void BM_Equivalent(benchmark::State& state) {
  const auto& e = find("g(6,6)");
  const auto a = e.matrix(3).working;
  const auto b = e.matrix(4).working;
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b));
}

void BM_CompareTable(benchmark::State& state) {
  const auto& e = find("g(8,3)");
  const auto t = enumerate_classes(e.matrices[0].working);
  const auto printed = e.working_matrices();
  for (auto _ : state) benchmark::DoNotOptimize(compare_table(t, printed, e.table));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Enumerate, g83, "g(8,3)/1");
BENCHMARK_CAPTURE(BM_Enumerate, g66, "g(6,6)/1");
BENCHMARK(BM_Equivalent);
BENCHMARK(BM_CompareTable);
