#include <benchmark/benchmark.h>

#include "modsuper/catalog.hpp"
#include "modsuper/relations.hpp"

using namespace modsuper;

namespace {

const PrimeField F3(3);

void BM_Presented(benchmark::State& state, const char* slot) {
  const auto& s = lookup(slot);
  const CartanDatum& d = s.matrix->working;
  auto rels = serre_relations(d).exprs();
  const auto extra = s.entry->defining_relations(s.matrix->index).exprs();
  rels.insert(rels.end(), extra.begin(), extra.end());
  for (auto _ : state) benchmark::DoNotOptimize(build_from_relations(d, F3, rels));
}

void BM_SerreOnly(benchmark::State& state) {
  const CartanDatum& d = lookup("g(2,3)/1").matrix->working;
  PresentedOptions o;
  o.max_height = static_cast<int>(state.range(0));
  o.truncate = true;
  const auto rels = serre_relations(d).exprs();
  for (auto _ : state) benchmark::DoNotOptimize(build_from_relations(d, F3, rels, o));
}

void BM_Discover(benchmark::State& state) {
  const CartanDatum& d = lookup("g(3,3)/1").matrix->working;
  for (auto _ : state) benchmark::DoNotOptimize(discover_relations(d, F3));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Presented, g23, "g(2,3)/1");
BENCHMARK_CAPTURE(BM_Presented, g33, "g(3,3)/1");
BENCHMARK_CAPTURE(BM_Presented, g43, "g(4,3)/1");
BENCHMARK(BM_SerreOnly)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_Discover);
