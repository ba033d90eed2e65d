#include <benchmark/benchmark.h>

#include <random>

#include "modsuper/bracket.hpp"
#include "modsuper/catalog.hpp"

using namespace modsuper;

namespace {

const PrimeField F3(3);

Element<PrimeField> random_root_vector(const GradedAlgebra<PrimeField>& g, std::mt19937_64& rng, Part part) {
  Element<PrimeField> x;
  x.part = part;
  x.space = static_cast<int>(rng() % g.spaces().size());
  x.c.assign(g.space(x.space).basis.size(), F3.zero());
  for (auto& v : x.c) v = F3.from_int(static_cast<long long>(rng() % 3));
  x.c[0] = F3.one();
  return x;
}

void BM_Bracket(benchmark::State& state, const char* slot, Part a, Part b) {
  const auto g = build(lookup(slot).matrix->working, F3);
  std::mt19937_64 rng(7);
  std::vector<std::pair<Element<PrimeField>, Element<PrimeField>>> pairs;
  for (int i = 0; i < 256; ++i) pairs.emplace_back(random_root_vector(g, rng, a), random_root_vector(g, rng, b));
  Bracket<PrimeField> br(g);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(br(x, y));
  }
}

void BM_Evaluate(benchmark::State& state) {
  const auto& s = lookup("g(8,6)/1");
  const auto g = build(s.matrix->working, F3);
  const auto rels = s.entry->defining_relations(1).exprs();
  for (auto _ : state)
    for (const auto& r : rels) benchmark::DoNotOptimize(evaluate(g, r));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Bracket, g66_pos_pos, "g(6,6)/1", Part::Positive, Part::Positive);
BENCHMARK_CAPTURE(BM_Bracket, g66_pos_neg, "g(6,6)/1", Part::Positive, Part::Negative);
BENCHMARK_CAPTURE(BM_Bracket, g86_pos_neg, "g(8,6)/1", Part::Positive, Part::Negative);
BENCHMARK(BM_Evaluate);
