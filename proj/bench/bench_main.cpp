#include <benchmark/benchmark.h>
#include <omp.h>

#include "ptmc/constructions.hpp"
#include "ptmc/cover_search.hpp"
#include "ptmc/gamma2.hpp"
#include "ptmc/verify.hpp"

using namespace ptmc;

namespace {

const BuiltCode &lattice_code() {
  static const BuiltCode b = build_thm2({4, 4, 4}, {2, 2, 2});
  return b;
}

const ExactCoverInstance &tiling() {
  static const ExactCoverInstance inst = [] {
    const TemplateSpec spec = template_thm3();
    std::vector<TilingShape> shapes;
    for (const TemplateShape &s : spec.shapes) shapes.push_back({s.name, s.cells, s.radius, {}});
    return tiling_instance(spec.torus, shapes).cover;
  }();
  return inst;
}

const ExactCoverInstance &grid_eds() {
  static const ExactCoverInstance inst = eds_instance(lattice_graph(Ambient::window({{0, 6}, {0, 6}})));
  return inst;
}

void BM_VerifySerial(benchmark::State &state) {
  const BuiltCode &b = lattice_code();
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_kappa_ptmc(b.code, b.kappa));
}

void BM_VerifyParallel(benchmark::State &state) {
  const BuiltCode &b = lattice_code();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_kappa_ptmc(b.code, b.kappa));
}

void BM_TilingSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate(tiling(), 64));
}

void BM_TilingParallel(benchmark::State &state) {
  SearchOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(tiling(), 64, opts));
}

void BM_GridEdsSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate(grid_eds(), 1000));
}

void BM_GridEdsParallel(benchmark::State &state) {
  SearchOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(grid_eds(), 1000, opts));
}

void BM_HiveEnumeration(benchmark::State &state) {
  const gamma::Hive h = gamma::build_hive({});
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma::enumerate_hive_2ptmc(h));
}

const int kMaxThreads = omp_get_num_procs();

} // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->RangeMultiplier(2)->Range(1, kMaxThreads)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TilingSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TilingParallel)->RangeMultiplier(2)->Range(1, kMaxThreads)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridEdsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridEdsParallel)->RangeMultiplier(2)->Range(1, kMaxThreads)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HiveEnumeration)->RangeMultiplier(2)->Range(1, kMaxThreads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
