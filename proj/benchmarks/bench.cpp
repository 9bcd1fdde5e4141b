#include <benchmark/benchmark.h>

#include "digitop/canonical.hpp"
#include "digitop/digitize.hpp"
#include "digitop/gallery.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "digitop/manifold.hpp"
#include "digitop/transform.hpp"

using namespace digitop;

static void BM_CanonicalFormTorus(benchmark::State& state) {
  Graph t = torus16();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalFormTorus);

static void BM_PuncturedTorusContractible(benchmark::State& state) {
  Graph t = remove(torus16(), {VertexId("7")});
  for (auto _ : state) benchmark::DoNotOptimize(is_contractible(t));
}
BENCHMARK(BM_PuncturedTorusContractible);

static void BM_ClassifyGallery(benchmark::State& state) {
  std::vector<Graph> all;
  for (const auto& name : gallery_names()) all.push_back(gallery(name));
  for (auto _ : state)
    for (const auto& g : all) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_ClassifyGallery);

static void BM_CompressCircleModel(benchmark::State& state) {
  const double L = 1.0 / static_cast<double>(state.range(0));
  Graph g = digitize(Circle{0, 0, 3}, L).graph;
  for (auto _ : state) benchmark::DoNotOptimize(compress(g));
  state.counters["points"] = static_cast<double>(g.size());
}
BENCHMARK(BM_CompressCircleModel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CompressSphereModel(benchmark::State& state) {
  Graph g = digitize(SphereSurface{0, 0, 0, 3}, 1.0).graph;
  for (auto _ : state) benchmark::DoNotOptimize(compress(g));
}
BENCHMARK(BM_CompressSphereModel)->Unit(benchmark::kMillisecond);

static void BM_BettiSphereModel(benchmark::State& state) {
  Graph g = digitize(SphereSurface{0, 0, 0, 3}, 1.0).graph;
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(g));
}
BENCHMARK(BM_BettiSphereModel)->Unit(benchmark::kMillisecond);

static void BM_DigitizeSphere(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(digitize(SphereSurface{0, 0, 0, 3}, 1.0));
}
BENCHMARK(BM_DigitizeSphere)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
