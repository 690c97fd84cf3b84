#include <benchmark/benchmark.h>

#include "pqdist/constructions.hpp"
#include "pqdist/generate.hpp"
#include "pqdist/search.hpp"

using namespace pqdist;

static void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = generate_all(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(canonical_form(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(7);

static void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Generate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_RelationSpectrum(benchmark::State& state) {
  const auto graphs = generate_all(7);
  for (auto _ : state)
    for (std::size_t i = 0; i < graphs.size(); i += 10) benchmark::DoNotOptimize(relation_spectrum(graphs[i]));
}
BENCHMARK(BM_RelationSpectrum)->Unit(benchmark::kMillisecond);

static void BM_SignatureAtAlgebraic(benchmark::State& state) {
  Graph c7 = Graph::cycle(7);
  AlgebraicNumber lam = isolate_roots(IntPolynomial{-1, -2, 1, 1})[1];
  auto d = DissimilarityMatrix::from_relation(c7, 1, b_of_lambda(lam, 1));
  for (auto _ : state) benchmark::DoNotOptimize(embedding_dimension(d));
}
BENCHMARK(BM_SignatureAtAlgebraic);

static void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_Classify)->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_TwentyTwoPoint(benchmark::State& state) {
  for (auto _ : state) {
    PointSet x = construct_22point();
    benchmark::DoNotOptimize(embedding_dimension(distance_matrix(x)));
  }
}
BENCHMARK(BM_TwentyTwoPoint)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
