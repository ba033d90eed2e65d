#include <benchmark/benchmark.h>

#include "modsuper/catalog.hpp"

using namespace modsuper;

namespace {

const PrimeField F3(3);

void BM_RadicalBuild(benchmark::State& state, const char* slot) {
  const CartanDatum d = lookup(slot).matrix->working;
  for (auto _ : state) {
    auto g = build(d, F3);
    benchmark::DoNotOptimize(g.dimension());
  }
}

void BM_Report(benchmark::State& state) {
  const auto g = build(lookup("g(8,6)/1").matrix->working, F3);
  for (auto _ : state) benchmark::DoNotOptimize(report(g));
}

void BM_CatalogParse(benchmark::State& state) {
  const std::string text(corpus_text("g(6,6)"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_corpus("g_6_6.txt", text));
}

}  // namespace

BENCHMARK_CAPTURE(BM_RadicalBuild, g23, "g(2,3)/1");
BENCHMARK_CAPTURE(BM_RadicalBuild, g43, "g(4,3)/1");
BENCHMARK_CAPTURE(BM_RadicalBuild, g66, "g(6,6)/1");
BENCHMARK_CAPTURE(BM_RadicalBuild, g86, "g(8,6)/1");
BENCHMARK(BM_Report);
BENCHMARK(BM_CatalogParse);
