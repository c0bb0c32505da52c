#include <benchmark/benchmark.h>

#include "chernkit/analysis.hpp"
#include "chernkit/catalog.hpp"
#include "chernkit/mixed.hpp"

namespace {

using namespace chernkit;

Point point_for(const CatalogEntry& e) { return sample_points(e, 1, 1).front(); }

void BM_Parse(benchmark::State& state) {
  const std::string source = catalog_source("fubini-study-4");
  for (auto _ : state) benchmark::DoNotOptimize(parse_metric(source));
}
BENCHMARK(BM_Parse);

void BM_CompileJet(benchmark::State& state) {
  const MetricSpec spec = builtin("fubini-study-" + std::to_string(state.range(0))).spec;
  for (auto _ : state) benchmark::DoNotOptimize(SymbolicJet(spec));
}
BENCHMARK(BM_CompileJet)->DenseRange(2, 4);

void BM_JetAt(benchmark::State& state) {
  const CatalogEntry e = builtin("fubini-study-" + std::to_string(state.range(0)));
  const SymbolicJet jet(e.spec);
  const Point p = point_for(e);
  for (auto _ : state) benchmark::DoNotOptimize(jet.at(p));
}
BENCHMARK(BM_JetAt)->DenseRange(2, 4);

void BM_Analyze(benchmark::State& state) {
  const CatalogEntry e = builtin("hopf-" + std::to_string(state.range(0)));
  const SymbolicJet jet(e.spec);
  const Point p = point_for(e);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(jet, p));
}
BENCHMARK(BM_Analyze)->DenseRange(2, 4);

void BM_Extremize(benchmark::State& state) {
  const CatalogEntry e = builtin("hopf-" + std::to_string(state.range(0)));
  const PointAnalysis a = analyze(SymbolicJet(e.spec), point_for(e));
  const Matrix id = Matrix::Identity(e.spec.n, e.spec.n);
  for (auto _ : state) benchmark::DoNotOptimize(extremize(a.unitary, id, MixedParams(1.0, 1.0)));
}
BENCHMARK(BM_Extremize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const CatalogEntry e = builtin("hopf-3");
  const PointAnalysis a = analyze(SymbolicJet(e.spec), point_for(e));
  MonteCarloOptions options;
  options.samples = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sphere_average_monte_carlo(a.coordinate, a.jet.g, MixedParams(1.0, 1.0), options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
